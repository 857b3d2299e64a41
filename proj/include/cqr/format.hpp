#pragma once

#include <string>

namespace cqr {

/// Locale-independent fixed-point rendering with the given number of
/// fractional digits (1..17). Negative zero is normalized to zero.
std::string format_fixed(double value, int precision);

}  // namespace cqr

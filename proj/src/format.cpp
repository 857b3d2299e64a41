#include "cqr/format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace cqr {

std::string format_fixed(double value, int precision) {
    if (precision < 1 || precision > 17) throw std::domain_error("precision must lie in [1,17]");
    if (value == 0.0) value = 0.0;  // drop the sign of -0

    char buf[64];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

}  // namespace cqr

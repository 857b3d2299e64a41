#pragma once

#include <stdexcept>
#include <string>

namespace cqr {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonHermitian : std::invalid_argument {
    explicit NonHermitian(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUnitDiagonal : std::invalid_argument {
    explicit NonUnitDiagonal(const std::string& what) : std::invalid_argument(what) {}
};

struct NotPositiveSemidefinite : std::invalid_argument {
    explicit NotPositiveSemidefinite(const std::string& what) : std::invalid_argument(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateChannel : std::invalid_argument {
    explicit DegenerateChannel(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedKind : std::invalid_argument {
    explicit UnsupportedKind(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cqr

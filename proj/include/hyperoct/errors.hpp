#pragma once

#include <stdexcept>

namespace hyperoct {

// Operands do not live in the same group B_N.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a hard size guard (group enumeration, matrix side, ...).
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Operation is undefined for the given parameters.
struct unsupported_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace hyperoct

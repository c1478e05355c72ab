#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct overflow_error : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct invalid_order : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unsupported_order : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_matrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct asymmetry_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct grid_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct boundary_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace riesz

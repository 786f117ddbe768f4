#pragma once

#include <stdexcept>
#include <string>

namespace shiish {

/// Raised when an input exceeds a configured size guard.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size limits for the exponential-cost routines.
struct Guards {
    std::size_t max_geometry_hyperplanes = 22;
    std::size_t max_mobius_hyperplanes = 14;
    int max_sweep_n = 6;
};

} // namespace shiish

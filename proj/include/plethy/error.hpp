#ifndef PLETHY_ERROR_HPP
#define PLETHY_ERROR_HPP

#include <stdexcept>

namespace plethy {

// Bad argument: mismatched sizes, invalid partitions, out-of-range letters.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Computation refused because it would exceed a configured guard
// (degree limit, dense-tensor size, search budget for scans).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace plethy

#endif

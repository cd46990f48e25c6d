#pragma once

#include <stdexcept>
#include <string>

namespace ncalc {

// Raised when a graded piece or matrix would exceed the configured dimension bound.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Caps {
    std::size_t max_dim = 20000;
    int max_weight = 8;

    void check(std::size_t dim, const std::string& what) const {
        if (dim > max_dim)
            throw CapExceeded(what + ": dimension " + std::to_string(dim) + " exceeds cap " +
                              std::to_string(max_dim));
    }
};

Caps& default_caps();

}  // namespace ncalc

#pragma once

#include <stdexcept>
#include <string>

namespace satake {

// Raised when inputs are well-formed but outside the mathematical domain of an
// operation (invalid type, unknown orbit label, pair not in the folding table,
// non-integral weight, ...).  The CLI maps this to exit status 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace satake

#pragma once

// Small dense exact linear algebra, only what root data construction needs.

#include <stdexcept>
#include <vector>

#include "satake/rational.hpp"

namespace satake::detail {

using Matrix = std::vector<RationalVector>;

// Solves A x = b for square nonsingular A by Gauss-Jordan elimination.
inline RationalVector solve(Matrix a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::logic_error("singular system");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        Rational inv = Rational(1) / a[c][c];
        for (auto& x : a[c]) x *= inv;
        b[c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    return b;
}

}  // namespace satake::detail

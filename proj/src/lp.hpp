#pragma once

// Exact two-phase simplex (Bland's rule) for
//     maximize c.x  subject to  A x <= b,  x >= 0.
// Problems here have at most a few dozen constraints and five variables, so a
// dense tableau over rationals is plenty.

#include <optional>
#include <vector>

#include "satake/rational.hpp"

namespace satake::detail {

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational value;
    RationalVector x;
};

LpResult maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c);

}  // namespace satake::detail

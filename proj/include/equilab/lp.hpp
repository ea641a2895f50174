#pragma once

#include <variant>
#include <vector>

#include "equilab/rational.hpp"

namespace equilab {

enum class Sense { minimize, maximize };

/// optimize objective·x subject to equalities·x = rhs and x_j >= 0 wherever
/// nonnegative[j]; other variables are free.
struct LinearProgram {
    RationalMatrix equalities;
    RationalVector rhs;
    std::vector<bool> nonnegative;
    RationalVector objective;
    Sense sense = Sense::minimize;

    int variables() const noexcept { return static_cast<int>(objective.size()); }
    /// Exact check of every equality and sign constraint.
    bool feasible(const RationalVector& x) const;
};

struct LpOptimal {
    Rational value;
    RationalVector x;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpResult = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Two-phase dense simplex over exact rationals with Bland's rule.
LpResult lp_optimize(const LinearProgram& lp);

}  // namespace equilab

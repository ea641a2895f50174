#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "equilab/rational.hpp"

namespace equilab {

struct RowEchelon {
    RationalMatrix reduced;  // reduced row echelon form, zero rows dropped
    std::vector<int> pivot_columns;
    int columns = 0;

    int rank() const noexcept { return static_cast<int>(pivot_columns.size()); }
};

/// Gauss-Jordan elimination; pivots on the smallest usable row index.
RowEchelon row_reduce(RationalMatrix a, int columns);

/// Basis of {x : A x = 0}, one primitive integer vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a, int columns);

struct AffineSolution {
    /// Minimum-norm particular solution (orthogonal to the kernel).
    RationalVector particular;
    std::vector<RationalVector> kernel;
};

/// y with yᵀA = 0 and yᵀb != 0: the system A x = b has no solution.
struct InconsistentSystem {
    RationalVector multipliers;
    Rational residual;  // yᵀb
};

std::variant<AffineSolution, InconsistentSystem> solve_affine(const RationalMatrix& a, const RationalVector& b, int columns);

/// Any solution of A x = b (free variables zero), or nothing.
std::optional<RationalVector> solve_any(const RationalMatrix& a, const RationalVector& b, int columns);

}  // namespace equilab

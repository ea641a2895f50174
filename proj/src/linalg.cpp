#include "equilab/linalg.hpp"

#include <stdexcept>

namespace equilab {

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

Integer common_denominator(const RationalVector& v) {
    Integer d = 1;
    for (const auto& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

RationalVector primitive_integer(const RationalVector& v) {
    Integer d = common_denominator(v);
    Integer g = 0;
    for (const auto& x : v) {
        Integer num = x.get_num() * (d / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) return v;
    RationalVector out;
    out.reserve(v.size());
    int sign = 0;
    for (const auto& x : v) {
        Integer num = x.get_num() * (d / x.get_den()) / g;
        if (sign == 0 && num != 0) sign = sgn(num);
        out.emplace_back(num);
    }
    if (sign < 0)
        for (auto& x : out) x = -x;
    return out;
}

namespace {

// Reduces `m` in place, choosing pivots only among the first `pivot_limit`
// columns. Returns the pivot columns; rows [rank, rows) end up zero on them.
std::vector<int> reduce_in_place(RationalMatrix& m, int pivot_limit) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < pivot_limit && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][static_cast<std::size_t>(col)]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][static_cast<std::size_t>(col)];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row) continue;
            const Rational f = m[r][static_cast<std::size_t>(col)];
            if (sgn(f) == 0) continue;
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RationalVector> kernel_from(const RationalMatrix& reduced, const std::vector<int>& pivots, int columns) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(columns), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<RationalVector> basis;
    for (int f = 0; f < columns; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RationalVector x(static_cast<std::size_t>(columns), Rational(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            x[static_cast<std::size_t>(pivots[i])] = -reduced[i][static_cast<std::size_t>(f)];
        }
        basis.push_back(primitive_integer(x));
    }
    return basis;
}

}  // namespace

RowEchelon row_reduce(RationalMatrix a, int columns) {
    RowEchelon out;
    out.columns = columns;
    out.pivot_columns = reduce_in_place(a, columns);
    a.resize(out.pivot_columns.size());
    out.reduced = std::move(a);
    return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& a, int columns) {
    auto re = row_reduce(a, columns);
    return kernel_from(re.reduced, re.pivot_columns, columns);
}

std::optional<RationalVector> solve_any(const RationalMatrix& a, const RationalVector& b, int columns) {
    RationalMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = reduce_in_place(m, columns);
    for (std::size_t r = pivots.size(); r < m.size(); ++r) {
        if (sgn(m[r][static_cast<std::size_t>(columns)]) != 0) return std::nullopt;
    }
    RationalVector x(static_cast<std::size_t>(columns), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[static_cast<std::size_t>(pivots[i])] = m[i][static_cast<std::size_t>(columns)];
    return x;
}

std::variant<AffineSolution, InconsistentSystem> solve_affine(const RationalMatrix& a, const RationalVector& b, int columns) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_affine: size mismatch");
    // [A | b | I] keeps track of which row combination produced each row.
    RationalMatrix m(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        m[i] = a[i];
        if (m[i].size() != static_cast<std::size_t>(columns)) throw std::invalid_argument("solve_affine: ragged matrix");
        m[i].push_back(b[i]);
        for (std::size_t j = 0; j < rows; ++j) m[i].emplace_back(i == j ? 1 : 0);
    }
    auto pivots = reduce_in_place(m, columns);
    const auto bcol = static_cast<std::size_t>(columns);
    for (std::size_t r = pivots.size(); r < rows; ++r) {
        if (sgn(m[r][bcol]) == 0) continue;
        InconsistentSystem proof;
        proof.multipliers.assign(m[r].begin() + static_cast<std::ptrdiff_t>(bcol) + 1, m[r].end());
        proof.multipliers = primitive_integer(proof.multipliers);
        proof.residual = dot(proof.multipliers, b);
        for (int c = 0; c < columns; ++c) {
            Rational s = 0;
            for (std::size_t i = 0; i < rows; ++i) s += proof.multipliers[i] * a[i][static_cast<std::size_t>(c)];
            if (sgn(s) != 0) throw std::logic_error("inconsistency certificate does not annihilate A");
        }
        if (sgn(proof.residual) == 0) throw std::logic_error("inconsistency certificate has zero residual");
        return proof;
    }

    AffineSolution sol;
    RationalVector p(static_cast<std::size_t>(columns), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) p[static_cast<std::size_t>(pivots[i])] = m[i][bcol];
    RationalMatrix reduced(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(pivots.size()));
    sol.kernel = kernel_from(reduced, pivots, columns);

    // Project p onto the orthogonal complement of the kernel.
    if (!sol.kernel.empty()) {
        const std::size_t d = sol.kernel.size();
        RationalMatrix gram(d, RationalVector(d));
        RationalVector rhs(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(sol.kernel[i], sol.kernel[j]);
            rhs[i] = dot(sol.kernel[i], p);
        }
        auto alpha = solve_any(gram, rhs, static_cast<int>(d));
        if (!alpha) throw std::logic_error("singular Gram matrix for an independent kernel basis");
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn((*alpha)[i]) == 0) continue;
            for (std::size_t c = 0; c < p.size(); ++c) p[c] -= (*alpha)[i] * sol.kernel[i][c];
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (dot(a[i], p) != b[i]) throw std::logic_error("particular solution fails an equation");
    }
    sol.particular = std::move(p);
    return sol;
}

}  // namespace equilab

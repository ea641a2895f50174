#include "equilab/lp.hpp"

#include <stdexcept>

namespace equilab {

bool LinearProgram::feasible(const RationalVector& x) const {
    if (x.size() != objective.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (nonnegative[j] && sgn(x[j]) < 0) return false;
    }
    for (std::size_t i = 0; i < equalities.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += equalities[i][j] * x[j];
        if (s != rhs[i]) return false;
    }
    return true;
}

namespace {

enum class Status { optimal, unbounded };

struct Tableau {
    RationalMatrix rows;  // each row: coefficients..., rhs
    std::vector<int> basis;
    int columns = 0;

    const Rational& rhs(std::size_t r) const { return rows[r][static_cast<std::size_t>(columns)]; }

    void pivot(std::size_t r, int col) {
        auto& pr = rows[r];
        const Rational inv = 1 / pr[static_cast<std::size_t>(col)];
        for (auto& x : pr) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Rational f = rows[i][static_cast<std::size_t>(col)];
            if (sgn(f) == 0) continue;
            for (std::size_t c = 0; c < pr.size(); ++c) {
                if (sgn(pr[c]) != 0) rows[i][c] -= f * pr[c];
            }
        }
        basis[r] = col;
    }

    // Minimises cost·x over columns [0, allowed). Bland: lowest-index entering
    // column, ties in the ratio test broken by lowest basic index.
    Status minimize(const RationalVector& cost, int allowed) {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < allowed && entering < 0; ++j) {
                Rational reduced = cost[static_cast<std::size_t>(j)];
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    const auto& a = rows[r][static_cast<std::size_t>(j)];
                    if (sgn(a) != 0) reduced -= cost[static_cast<std::size_t>(basis[r])] * a;
                }
                if (sgn(reduced) < 0) entering = j;
            }
            if (entering < 0) return Status::optimal;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const auto& a = rows[r][static_cast<std::size_t>(entering)];
                if (sgn(a) <= 0) continue;
                Rational ratio = rhs(r) / a;
                if (leave == rows.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return Status::unbounded;
            pivot(leave, entering);
        }
    }
};

}  // namespace

LpResult lp_optimize(const LinearProgram& lp) {
    const int n = lp.variables();
    if (lp.nonnegative.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("lp: sign vector size mismatch");
    if (lp.rhs.size() != lp.equalities.size()) throw std::invalid_argument("lp: rhs size mismatch");

    // Free variables become x = x+ - x-.
    std::vector<int> plus(static_cast<std::size_t>(n)), minus(static_cast<std::size_t>(n), -1);
    int cols = 0;
    for (int j = 0; j < n; ++j) {
        plus[static_cast<std::size_t>(j)] = cols++;
        if (!lp.nonnegative[static_cast<std::size_t>(j)]) minus[static_cast<std::size_t>(j)] = cols++;
    }
    const std::size_t m = lp.equalities.size();
    const int structural = cols;
    const int total = structural + static_cast<int>(m);  // plus one artificial per row

    Tableau t;
    t.columns = total;
    t.rows.assign(m, RationalVector(static_cast<std::size_t>(total) + 1, Rational(0)));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (lp.equalities[i].size() != static_cast<std::size_t>(n)) throw std::invalid_argument("lp: ragged constraint row");
        const int sign = sgn(lp.rhs[i]) < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) {
            const Rational a = lp.equalities[i][static_cast<std::size_t>(j)] * sign;
            t.rows[i][static_cast<std::size_t>(plus[static_cast<std::size_t>(j)])] = a;
            if (minus[static_cast<std::size_t>(j)] >= 0) t.rows[i][static_cast<std::size_t>(minus[static_cast<std::size_t>(j)])] = -a;
        }
        t.rows[i][static_cast<std::size_t>(structural) + i] = 1;
        t.rows[i][static_cast<std::size_t>(total)] = lp.rhs[i] * sign;
        t.basis[i] = structural + static_cast<int>(i);
    }

    // Phase 1: minimise the sum of artificials.
    RationalVector phase1(static_cast<std::size_t>(total), Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[static_cast<std::size_t>(structural) + i] = 1;
    t.minimize(phase1, total);
    Rational infeasibility = 0;
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] >= structural) infeasibility += t.rhs(r);
    }
    if (sgn(infeasibility) > 0) return LpInfeasible{};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows.size();) {
        if (t.basis[r] < structural) {
            ++r;
            continue;
        }
        int col = -1;
        for (int j = 0; j < structural && col < 0; ++j) {
            if (sgn(t.rows[r][static_cast<std::size_t>(j)]) != 0) col = j;
        }
        if (col >= 0) {
            t.pivot(r, col);
            ++r;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
        }
    }

    // Phase 2 over structural columns only.
    RationalVector cost(static_cast<std::size_t>(total), Rational(0));
    const int dir = lp.sense == Sense::maximize ? -1 : 1;
    for (int j = 0; j < n; ++j) {
        const Rational c = lp.objective[static_cast<std::size_t>(j)] * dir;
        cost[static_cast<std::size_t>(plus[static_cast<std::size_t>(j)])] = c;
        if (minus[static_cast<std::size_t>(j)] >= 0) cost[static_cast<std::size_t>(minus[static_cast<std::size_t>(j)])] = -c;
    }
    if (t.minimize(cost, structural) == Status::unbounded) return LpUnbounded{};

    RationalVector col_value(static_cast<std::size_t>(total), Rational(0));
    for (std::size_t r = 0; r < t.rows.size(); ++r) col_value[static_cast<std::size_t>(t.basis[r])] = t.rhs(r);
    LpOptimal out;
    out.x.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        out.x[static_cast<std::size_t>(j)] = col_value[static_cast<std::size_t>(plus[static_cast<std::size_t>(j)])];
        if (minus[static_cast<std::size_t>(j)] >= 0) out.x[static_cast<std::size_t>(j)] -= col_value[static_cast<std::size_t>(minus[static_cast<std::size_t>(j)])];
    }
    out.value = dot(lp.objective, out.x);
    if (!lp.feasible(out.x)) throw std::logic_error("simplex optimizer violates a constraint");
    return out;
}

}  // namespace equilab

#include "equilab/equicert.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace equilab {

namespace {

using Mask = std::uint64_t;
constexpr int kMaxMaskGround = 62;

Mask mask_of(const Subset& s) {
    Mask m = 0;
    for (int x : s) m |= Mask{1} << x;
    return m;
}

Subset subset_of(Mask m) {
    Subset s;
    while (m != 0) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

bool mask_before(Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

RationalVector characteristic(const Subset& t, int n) {
    RationalVector chi(static_cast<std::size_t>(n), Rational(0));
    for (int x : t) chi[static_cast<std::size_t>(x)] = 1;
    return chi;
}

Subset normalized_target(const SetSystem& s, Subset t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (t.empty()) throw InputError("target subset is empty");
    if (t.front() < 0 || t.back() >= s.ground_size) throw InputError("target element out of range");
    return t;
}

RationalMatrix transpose(const RationalMatrix& a, int columns) {
    RationalMatrix t(static_cast<std::size_t>(columns), RationalVector(a.size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(columns); ++j) t[j][i] = a[i][j];
    }
    return t;
}

// yᵀA as a vector over the ground set.
RationalVector combine_members(const SetSystem& s, const RationalVector& y) {
    RationalVector out(static_cast<std::size_t>(s.ground_size), Rational(0));
    for (std::size_t i = 0; i < s.family.size(); ++i) {
        if (sgn(y[i]) == 0) continue;
        for (int x : s.family[i]) out[static_cast<std::size_t>(x)] += y[i];
    }
    return out;
}

bool annihilates_members(const SetSystem& s, const RationalVector& v) {
    if (v.size() != static_cast<std::size_t>(s.ground_size)) return false;
    for (const auto& member : s.family) {
        Rational sum = 0;
        for (int x : member) sum += v[static_cast<std::size_t>(x)];
        if (sgn(sum) != 0) return false;
    }
    return true;
}

Rational sum_of(const RationalVector& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

class MemberMasks {
public:
    explicit MemberMasks(const SetSystem& s) {
        for (const auto& m : s.family) masks_.insert(mask_of(m));
    }
    bool contains(Mask m) const { return masks_.count(m) != 0; }

private:
    std::unordered_set<Mask> masks_;
};

// Scaled integer rows driving a Gray-code scan: a subset is a hit when the
// value row sums to `target` under `cmp` and every zero row sums to 0.
struct ScanRows {
    std::vector<Integer> value;
    std::vector<std::vector<Integer>> zero;
    Integer target;
};

enum class Compare { equal, at_most };

bool fits_int64(const ScanRows& rows) {
    const Integer limit = Integer(1) << 61;
    auto ok = [&](const std::vector<Integer>& row) {
        Integer total = 0;
        for (const auto& x : row) total += abs(x);
        return total < limit;
    };
    if (!ok(rows.value) || abs(rows.target) >= limit) return false;
    return std::all_of(rows.zero.begin(), rows.zero.end(), ok);
}

template <class Num>
std::optional<Mask> gray_scan(int n, const ScanRows& rows, Compare cmp, const MemberMasks& members, bool first_only) {
    const std::size_t width = rows.zero.size() + 1;
    std::vector<Num> column(static_cast<std::size_t>(n) * width);
    auto convert = [](const Integer& z) {
        if constexpr (std::is_same_v<Num, Integer>) {
            return z;
        } else {
            return static_cast<Num>(z.get_si());
        }
    };
    for (int i = 0; i < n; ++i) {
        Num* c = &column[static_cast<std::size_t>(i) * width];
        c[0] = convert(rows.value[static_cast<std::size_t>(i)]);
        for (std::size_t r = 0; r < rows.zero.size(); ++r) c[r + 1] = convert(rows.zero[r][static_cast<std::size_t>(i)]);
    }
    const Num target = convert(rows.target);
    std::vector<Num> sum(width, Num(0));
    Mask mask = 0;
    std::optional<Mask> best;
    const Mask limit = Mask{1} << n;
    for (Mask step = 1; step < limit; ++step) {
        const int bit = std::countr_zero(step);
        const Num* c = &column[static_cast<std::size_t>(bit) * width];
        mask ^= Mask{1} << bit;
        if ((mask >> bit) & 1) {
            for (std::size_t r = 0; r < width; ++r) sum[r] += c[r];
        } else {
            for (std::size_t r = 0; r < width; ++r) sum[r] -= c[r];
        }
        const bool value_ok = cmp == Compare::equal ? sum[0] == target : sum[0] <= target;
        if (!value_ok) continue;
        bool zero_ok = true;
        for (std::size_t r = 1; r < width && zero_ok; ++r) zero_ok = sum[r] == 0;
        if (!zero_ok || members.contains(mask)) continue;
        if (!best || mask_before(mask, *best)) best = mask;
        if (first_only) break;
    }
    return best;
}

std::optional<Mask> scan_subsets(int n, const ScanRows& rows, Compare cmp, const MemberMasks& members, bool first_only) {
    if (fits_int64(rows)) return gray_scan<std::int64_t>(n, rows, cmp, members, first_only);
    return gray_scan<Integer>(n, rows, cmp, members, first_only);
}

std::vector<Integer> scaled(const RationalVector& v, const Integer& factor) {
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        Rational y = x * factor;
        if (y.get_den() != 1) throw std::logic_error("scaling left a fraction");
        out.push_back(y.get_num());
    }
    return out;
}

ScanRows forced_rows(const RationalVector& point, const std::vector<RationalVector>& kernel, const Rational& target) {
    ScanRows rows;
    RationalVector with_target = point;
    with_target.push_back(target);
    const Integer d = common_denominator(with_target);
    rows.value = scaled(point, d);
    rows.target = scaled({target}, d).front();
    for (const auto& k : kernel) rows.zero.push_back(scaled(k, common_denominator(k)));
    return rows;
}

BudgetNote ground_budget(const SetSystem& s, int max_ground) {
    return BudgetNote{"ground set of " + std::to_string(s.ground_size) + " elements exceeds exhaustive limit",
                      static_cast<std::uint64_t>(max_ground)};
}

// Variables: y (members, free), z (ground, >= 0), u >= 0.
// Aᵀy - z = 0, Σy - u = -1, optionally Σz = 1; minimise Σy.
LinearProgram dual_program(const SetSystem& s, bool normalise_z) {
    const std::size_t m = s.family.size();
    const std::size_t n = static_cast<std::size_t>(s.ground_size);
    const std::size_t vars = m + n + 1;
    LinearProgram lp;
    lp.nonnegative.assign(vars, true);
    for (std::size_t j = 0; j < m; ++j) lp.nonnegative[j] = false;
    lp.objective.assign(vars, Rational(0));
    for (std::size_t j = 0; j < m; ++j) lp.objective[j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector row(vars, Rational(0));
        row[m + i] = -1;
        lp.equalities.push_back(std::move(row));
        lp.rhs.emplace_back(0);
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (int x : s.family[j]) lp.equalities[static_cast<std::size_t>(x)][j] = 1;
    }
    RationalVector bound(vars, Rational(0));
    for (std::size_t j = 0; j < m; ++j) bound[j] = 1;
    bound[vars - 1] = -1;
    lp.equalities.push_back(std::move(bound));
    lp.rhs.emplace_back(-1);
    if (normalise_z) {
        RationalVector norm(vars, Rational(0));
        for (std::size_t i = 0; i < n; ++i) norm[m + i] = 1;
        lp.equalities.push_back(std::move(norm));
        lp.rhs.emplace_back(1);
    }
    return lp;
}

std::optional<RationalVector> dual_multipliers(const SetSystem& s, bool normalise_z, bool strict) {
    const auto result = lp_optimize(dual_program(s, normalise_z));
    const auto* opt = std::get_if<LpOptimal>(&result);
    if (opt == nullptr) return std::nullopt;
    if (strict ? sgn(opt->value) >= 0 : sgn(opt->value) > 0) return std::nullopt;
    return RationalVector(opt->x.begin(), opt->x.begin() + static_cast<std::ptrdiff_t>(s.family.size()));
}

// {x >= 0, every member sums to 1} with a caller-chosen objective.
LinearProgram unit_polytope(const SetSystem& s, RationalVector objective, Sense sense) {
    LinearProgram lp;
    lp.equalities = s.incidence();
    lp.rhs.assign(s.family.size(), Rational(1));
    lp.nonnegative.assign(static_cast<std::size_t>(s.ground_size), true);
    lp.objective = std::move(objective);
    lp.sense = sense;
    return lp;
}

}  // namespace

bool witness_before(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool SetSystem::contains_member(const Subset& s) const {
    return std::find(family.begin(), family.end(), s) != family.end();
}

bool SetSystem::well_formed() const {
    if (static_cast<int>(element_names.size()) != ground_size) return false;
    if (member_names.size() != family.size()) return false;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& a = family[i];
        if (a.empty() || !std::is_sorted(a.begin(), a.end())) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
        if (a.front() < 0 || a.back() >= ground_size) return false;
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j) continue;
            if (std::includes(family[j].begin(), family[j].end(), a.begin(), a.end())) return false;
        }
    }
    return true;
}

RationalMatrix SetSystem::incidence() const {
    RationalMatrix a(family.size(), RationalVector(static_cast<std::size_t>(ground_size), Rational(0)));
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (int x : family[i]) a[i][static_cast<std::size_t>(x)] = 1;
    }
    return a;
}

std::optional<int> SetSystem::find_element(std::string_view name) const {
    for (int i = 0; i < ground_size; ++i) {
        if (element_names[static_cast<std::size_t>(i)] == name) return i;
    }
    return std::nullopt;
}

SetSystem star_system(const Graph& g) {
    SetSystem s;
    s.ground_size = g.edge_count();
    s.source = "stars";
    for (EdgeId e = 0; e < g.edge_count(); ++e) s.element_names.push_back(g.edge_label(e));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d == 0) throw InputError("vertex " + g.label(v) + " is isolated");
        if (d == 1) {
            const Vertex w = g.neighbors(v)[0];
            if (g.degree(w) != 1 || w < v) continue;
        }
        const auto inc = g.incident_edges(v);
        s.family.emplace_back(inc.begin(), inc.end());
        s.member_names.push_back(g.label(v));
    }
    return s;
}

std::variant<SetSystem, BudgetNote> stable_system(const Graph& g, std::uint64_t budget) {
    auto stable = enumerate_maximal_stable_sets(g, budget);
    if (stable.exhausted) return BudgetNote{"maximal stable set enumeration", budget};
    SetSystem s;
    s.ground_size = g.vertex_count();
    s.source = "stable_sets";
    for (Vertex v = 0; v < g.vertex_count(); ++v) s.element_names.push_back(g.label(v));
    for (auto& set : stable.sets) {
        s.member_names.push_back(format_vertices(g, set));
        s.family.push_back(std::move(set));
    }
    return s;
}

Rational WeightFunction::total(const Subset& s) const {
    Rational sum = 0;
    for (int x : s) sum += weights.at(static_cast<std::size_t>(x));
    return sum;
}

bool AffineSolutionSpace::valid_for(const SetSystem& s) const {
    const auto& p = particular.weights;
    if (p.size() != static_cast<std::size_t>(s.ground_size)) return false;
    for (const auto& member : s.family) {
        if (particular.total(member) != 1) return false;
    }
    for (const auto& k : kernel_basis) {
        if (!annihilates_members(s, k)) return false;
    }
    if (static_cast<int>(kernel_basis.size()) + row_reduce(s.incidence(), s.ground_size).rank() != s.ground_size) {
        return false;
    }
    return row_reduce(kernel_basis, s.ground_size).rank() == static_cast<int>(kernel_basis.size());
}

bool UnitInfeasibility::valid_for(const SetSystem& s) const {
    if (multipliers.size() != s.family.size()) return false;
    for (const auto& x : combine_members(s, multipliers)) {
        if (sgn(x) != 0) return false;
    }
    return sgn(residual) != 0 && sum_of(multipliers) == residual;
}

std::variant<AffineSolutionSpace, UnitInfeasibility> solve_unit_system(const SetSystem& s) {
    const RationalVector ones(s.family.size(), Rational(1));
    auto solved = solve_affine(s.incidence(), ones, s.ground_size);
    if (auto* bad = std::get_if<InconsistentSystem>(&solved)) {
        UnitInfeasibility out{bad->multipliers, bad->residual};
        if (!out.valid_for(s)) throw std::logic_error("unit infeasibility proof failed verification");
        return out;
    }
    auto& sol = std::get<AffineSolution>(solved);
    AffineSolutionSpace out{WeightFunction{std::move(sol.particular)}, std::move(sol.kernel)};
    if (!out.valid_for(s)) throw std::logic_error("affine solution failed verification");
    return out;
}

bool ForcedValueCertificate::valid_for(const SetSystem& s) const {
    if (target.empty() || coefficients.size() != s.family.size()) return false;
    if (!std::is_sorted(target.begin(), target.end())) return false;
    if (target.front() < 0 || target.back() >= s.ground_size) return false;
    const auto combined = combine_members(s, coefficients);
    if (combined != characteristic(target, s.ground_size)) return false;
    return sum_of(coefficients) == value;
}

bool NotForced::valid_for(const SetSystem& s) const {
    if (!annihilates_members(s, direction)) return false;
    Rational ip = 0;
    for (int x : target) {
        if (x < 0 || x >= s.ground_size) return false;
        ip += direction[static_cast<std::size_t>(x)];
    }
    return sgn(ip) != 0 && ip == inner_product;
}

std::variant<ForcedValueCertificate, NotForced> forced_value(const SetSystem& s, const AffineSolutionSpace& space,
                                                             const Subset& target) {
    const Subset t = normalized_target(s, target);
    const RationalVector chi = characteristic(t, s.ground_size);
    for (const auto& k : space.kernel_basis) {
        const Rational ip = dot(k, chi);
        if (sgn(ip) != 0) {
            NotForced out{t, k, ip};
            if (!out.valid_for(s)) throw std::logic_error("separating direction failed verification");
            return out;
        }
    }
    auto lambda = solve_any(transpose(s.incidence(), s.ground_size), chi, static_cast<int>(s.family.size()));
    if (!lambda) throw std::logic_error("target orthogonal to the kernel but outside the row space");
    ForcedValueCertificate out{t, std::move(*lambda), Rational(0)};
    out.value = sum_of(out.coefficients);
    if (!out.valid_for(s) || out.value != dot(space.particular.weights, chi)) {
        throw std::logic_error("forced-value certificate failed verification");
    }
    return out;
}

std::variant<ForcedValueCertificate, NotForced> forced_value(const SetSystem& s, const Subset& target) {
    auto space = solve_unit_system(s);
    if (std::holds_alternative<UnitInfeasibility>(space)) throw InputError("unit system is infeasible");
    return forced_value(s, std::get<AffineSolutionSpace>(space), target);
}

namespace {

WeightingCheck check_weighting(const SetSystem& s, const WeightFunction& phi, int max_ground, bool first_only) {
    WeightingCheck out;
    if (phi.weights.size() != static_cast<std::size_t>(s.ground_size)) throw std::invalid_argument("weighting size mismatch");
    if (s.ground_size > std::min(max_ground, kMaxMaskGround)) {
        out.budget = ground_budget(s, max_ground);
        return out;
    }
    std::optional<Subset> bad_member;
    for (const auto& member : s.family) {
        if (phi.total(member) != 1 && (!bad_member || witness_before(member, *bad_member))) bad_member = member;
    }
    if (bad_member) {
        out.answer = Answer::no;
        out.witness = bad_member;
        return out;
    }
    ScanRows rows;
    const Integer d = common_denominator(phi.weights);
    rows.value = scaled(phi.weights, d);
    rows.target = d;
    const MemberMasks members(s);
    const auto hit = scan_subsets(s.ground_size, rows, Compare::equal, members, first_only);
    out.answer = hit ? Answer::no : Answer::yes;
    if (hit) out.witness = subset_of(*hit);
    return out;
}

struct StrictOptimum {
    bool feasible = false;
    Rational t;
    RationalVector x;
};

// max t subject to A x = 1, x_i >= t, x >= 0, t <= 1.
StrictOptimum max_min_weight(const SetSystem& s) {
    const std::size_t m = s.family.size();
    const std::size_t n = static_cast<std::size_t>(s.ground_size);
    const std::size_t t = n;
    const std::size_t vars = n + 1 + n + 1;
    LinearProgram lp;
    lp.nonnegative.assign(vars, true);
    lp.nonnegative[t] = false;
    lp.objective.assign(vars, Rational(0));
    lp.objective[t] = 1;
    lp.sense = Sense::maximize;
    for (std::size_t j = 0; j < m; ++j) {
        RationalVector row(vars, Rational(0));
        for (int x : s.family[j]) row[static_cast<std::size_t>(x)] = 1;
        lp.equalities.push_back(std::move(row));
        lp.rhs.emplace_back(1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector row(vars, Rational(0));
        row[i] = 1;
        row[t] = -1;
        row[n + 1 + i] = -1;
        lp.equalities.push_back(std::move(row));
        lp.rhs.emplace_back(0);
    }
    RationalVector cap(vars, Rational(0));
    cap[t] = 1;
    cap[vars - 1] = 1;
    lp.equalities.push_back(std::move(cap));
    lp.rhs.emplace_back(1);
    const auto result = lp_optimize(lp);
    StrictOptimum out;
    if (const auto* opt = std::get_if<LpOptimal>(&result)) {
        out.feasible = true;
        out.t = opt->value;
        out.x.assign(opt->x.begin(), opt->x.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return out;
}

}  // namespace

WeightingCheck verify_weighting(const SetSystem& s, const WeightFunction& phi, int max_ground) {
    return check_weighting(s, phi, max_ground, false);
}

bool StrictInfeasibility::valid_for(const SetSystem& s) const {
    if (multipliers.size() != s.family.size()) return false;
    bool nonzero = false;
    for (const auto& z : combine_members(s, multipliers)) {
        if (sgn(z) < 0) return false;
        nonzero = nonzero || sgn(z) != 0;
    }
    return nonzero && sgn(sum_of(multipliers)) <= 0;
}

EquiDecision decide_equi_exact(const SetSystem& s, const DecideOptions& options) {
    EquiDecision out;
    if (s.ground_size > std::min(options.max_ground, kMaxMaskGround)) {
        out.witness = ground_budget(s, options.max_ground);
        return out;
    }
    auto unit = solve_unit_system(s);
    if (auto* bad = std::get_if<UnitInfeasibility>(&unit)) {
        out.answer = Answer::no;
        out.witness = *bad;
        return out;
    }
    const auto& space = std::get<AffineSolutionSpace>(unit);

    const StrictOptimum strict = max_min_weight(s);
    if (!strict.feasible || sgn(strict.t) <= 0) {
        auto y = dual_multipliers(s, true, false);
        if (!y) throw std::logic_error("no strictly positive solution but no alternative certificate");
        StrictInfeasibility proof{std::move(*y)};
        if (!proof.valid_for(s)) throw std::logic_error("strict infeasibility proof failed verification");
        out.answer = Answer::no;
        out.witness = std::move(proof);
        return out;
    }

    const MemberMasks members(s);
    const auto forced = scan_subsets(s.ground_size, forced_rows(space.particular.weights, space.kernel_basis, Rational(1)),
                                     Compare::equal, members, false);
    if (forced) {
        auto cert = forced_value(s, space, subset_of(*forced));
        out.answer = Answer::no;
        out.witness = std::get<ForcedValueCertificate>(std::move(cert));
        return out;
    }

    // Every non-member hyperplane misses a relatively open set; perturb the
    // LP optimum randomly inside the kernel until verification succeeds.
    std::mt19937_64 rng(options.seed);
    long bound = 1000;
    constexpr int kRetries = 64;
    constexpr int kEscalations = 4;
    for (int round = 0; round <= kEscalations; ++round, bound *= 10) {
        std::uniform_int_distribution<long> num(-bound, bound);
        std::uniform_int_distribution<long> den(1, bound);
        for (int attempt = 0; attempt < kRetries; ++attempt) {
            ++out.attempts;
            RationalVector direction(static_cast<std::size_t>(s.ground_size), Rational(0));
            for (const auto& k : space.kernel_basis) {
                const Rational r = make_rational(Integer(num(rng)), Integer(den(rng)));
                for (std::size_t i = 0; i < direction.size(); ++i) direction[i] += r * k[i];
            }
            Rational largest = 0;
            for (const auto& x : direction) largest = std::max(largest, Rational(abs(x)));
            WeightFunction phi{strict.x};
            if (sgn(largest) != 0) {
                const Rational alpha = strict.t / (2 * largest);
                for (std::size_t i = 0; i < direction.size(); ++i) phi.weights[i] += alpha * direction[i];
            }
            if (check_weighting(s, phi, options.max_ground, true).answer == Answer::yes) {
                out.answer = Answer::yes;
                out.witness = std::move(phi);
                return out;
            }
        }
    }
    out.witness = BudgetNote{"random weighting draws", static_cast<std::uint64_t>(out.attempts)};
    return out;
}

bool EmptyPolytope::valid_for(const SetSystem& s) const {
    if (multipliers.size() != s.family.size()) return false;
    for (const auto& z : combine_members(s, multipliers)) {
        if (sgn(z) < 0) return false;
    }
    return sgn(sum_of(multipliers)) < 0;
}

SubsetRange subset_range(const SetSystem& s, const Subset& target) {
    const RationalVector chi = characteristic(normalized_target(s, target), s.ground_size);
    return SubsetRange{lp_optimize(unit_polytope(s, chi, Sense::minimize)), lp_optimize(unit_polytope(s, chi, Sense::maximize))};
}

bool PinnedSubset::valid_for(const SetSystem& s) const {
    if (target.empty() || s.contains_member(target) || value > 1) return false;
    const auto range = subset_range(s, target);
    const auto* lo = std::get_if<LpOptimal>(&range.min);
    const auto* hi = std::get_if<LpOptimal>(&range.max);
    return lo != nullptr && hi != nullptr && lo->value == value && hi->value == value;
}

StrongDecision strong_check(const SetSystem& s, int max_ground) {
    StrongDecision out;
    if (s.ground_size > std::min(max_ground, kMaxMaskGround)) {
        out.witness = ground_budget(s, max_ground);
        return out;
    }
    const std::size_t n = static_cast<std::size_t>(s.ground_size);
    const auto point = lp_optimize(unit_polytope(s, RationalVector(n, Rational(0)), Sense::minimize));
    if (!std::holds_alternative<LpOptimal>(point)) {
        auto y = dual_multipliers(s, false, true);
        if (!y) throw std::logic_error("empty polytope without a Farkas certificate");
        EmptyPolytope proof{std::move(*y)};
        if (!proof.valid_for(s)) throw std::logic_error("Farkas certificate failed verification");
        out.answer = Answer::no;
        out.witness = std::move(proof);
        return out;
    }
    const auto& p = std::get<LpOptimal>(point).x;

    // Affine hull of the polytope: member equations plus coordinates that
    // vanish everywhere on it.
    RationalMatrix hull = s.incidence();
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector unit(n, Rational(0));
        unit[i] = 1;
        const auto top = lp_optimize(unit_polytope(s, unit, Sense::maximize));
        const auto* opt = std::get_if<LpOptimal>(&top);
        if (opt != nullptr && sgn(opt->value) == 0) hull.push_back(std::move(unit));
    }
    const auto directions = kernel_basis(hull, s.ground_size);

    const MemberMasks members(s);
    const auto pinned = scan_subsets(s.ground_size, forced_rows(p, directions, Rational(1)), Compare::at_most, members, false);
    if (!pinned) {
        out.answer = Answer::yes;
        return out;
    }
    PinnedSubset witness{subset_of(*pinned), Rational(0)};
    witness.value = dot(characteristic(witness.target, s.ground_size), p);
    if (!witness.valid_for(s)) throw std::logic_error("pinned subset failed LP confirmation");
    out.answer = Answer::no;
    out.witness = std::move(witness);
    return out;
}

}  // namespace equilab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "equilab/graph.hpp"
#include "equilab/linalg.hpp"
#include "equilab/lp.hpp"
#include "equilab/rational.hpp"
#include "equilab/verdict.hpp"

namespace equilab {

/// Sorted list of ground-element indices.
using Subset = std::vector<int>;

/// A ground set with a distinguished family of subsets: the maximal stars of
/// a graph (ground = edges) or its maximal stable sets (ground = vertices).
struct SetSystem {
    int ground_size = 0;
    std::vector<std::string> element_names;
    std::vector<Subset> family;
    std::vector<std::string> member_names;
    std::string source;

    bool contains_member(const Subset& s) const;
    /// Family members nonempty, distinct and inclusion-maximal.
    bool well_formed() const;
    /// 0/1 incidence matrix, one row per family member.
    RationalMatrix incidence() const;
    std::optional<int> find_element(std::string_view name) const;
};

inline constexpr int kDefaultExhaustiveGround = 24;
inline constexpr int kDefaultStrongGround = 16;

/// Ground = edge ids; family = E(v) for every non-leaf v plus the edge of
/// each K2 component. Throws InputError when g has an isolated vertex.
SetSystem star_system(const Graph& g);
/// Ground = vertex ids; family = maximal stable sets.
std::variant<SetSystem, BudgetNote> stable_system(const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);

struct WeightFunction {
    RationalVector weights;

    Rational total(const Subset& s) const;
};

/// Solution set of "every family member sums to 1".
struct AffineSolutionSpace {
    WeightFunction particular;
    std::vector<RationalVector> kernel_basis;

    bool valid_for(const SetSystem& s) const;
};

/// multipliers·(member rows) = 0 while multipliers·1 != 0.
struct UnitInfeasibility {
    RationalVector multipliers;
    Rational residual;

    bool valid_for(const SetSystem& s) const;
};

std::variant<AffineSolutionSpace, UnitInfeasibility> solve_unit_system(const SetSystem& s);

/// χ^T = Σ λ_i χ^{S_i}: every unit weighting gives T the total Σ λ_i.
struct ForcedValueCertificate {
    Subset target;
    RationalVector coefficients;
    Rational value;

    bool valid_for(const SetSystem& s) const;
};

/// A kernel direction along which the total of T changes.
struct NotForced {
    Subset target;
    RationalVector direction;
    Rational inner_product;

    bool valid_for(const SetSystem& s) const;
};

/// Throws InputError if the unit system is infeasible or T is empty.
std::variant<ForcedValueCertificate, NotForced> forced_value(const SetSystem& s, const Subset& target);
std::variant<ForcedValueCertificate, NotForced> forced_value(const SetSystem& s, const AffineSolutionSpace& space,
                                                             const Subset& target);

struct WeightingCheck {
    Answer answer = Answer::unknown;
    /// A non-family subset of total 1, or a family member whose total is not 1.
    std::optional<Subset> witness;
    std::optional<BudgetNote> budget;
};

/// Exhaustive: yes iff the subsets of total exactly 1 are exactly the family.
WeightingCheck verify_weighting(const SetSystem& s, const WeightFunction& phi, int max_ground = kDefaultExhaustiveGround);

/// y with yᵀA >= 0, yᵀA != 0 and yᵀ1 <= 0: no strictly positive unit weighting.
struct StrictInfeasibility {
    RationalVector multipliers;

    bool valid_for(const SetSystem& s) const;
};

struct DecideOptions {
    int max_ground = kDefaultExhaustiveGround;
    std::uint64_t seed = 0;
};

using EquiWitness = std::variant<std::monostate, WeightFunction, UnitInfeasibility, StrictInfeasibility,
                                 ForcedValueCertificate, BudgetNote>;

struct EquiDecision {
    Answer answer = Answer::unknown;
    EquiWitness witness;
    /// Random draws spent finding the weighting.
    int attempts = 0;
};

/// Does a strictly positive weighting exist whose unit-total subsets are
/// exactly the family?
EquiDecision decide_equi_exact(const SetSystem& s, const DecideOptions& options = {});

/// The nonnegative unit polytope is empty: yᵀA >= 0 with yᵀ1 < 0.
struct EmptyPolytope {
    RationalVector multipliers;

    bool valid_for(const SetSystem& s) const;
};

/// T's total is pinned to value <= 1 over the nonnegative unit polytope.
struct PinnedSubset {
    Subset target;
    Rational value;

    /// Re-derives min and max of T's total by two LPs.
    bool valid_for(const SetSystem& s) const;
};

using StrongWitness = std::variant<std::monostate, EmptyPolytope, PinnedSubset, BudgetNote>;

struct StrongDecision {
    Answer answer = Answer::unknown;
    StrongWitness witness;
};

StrongDecision strong_check(const SetSystem& s, int max_ground = kDefaultStrongGround);

/// min and max of T's total over {x >= 0, every member sums to 1}.
struct SubsetRange {
    LpResult min;
    LpResult max;
};
SubsetRange subset_range(const SetSystem& s, const Subset& target);

/// Order used to pick a deterministic witness: smaller size first, then
/// lexicographic on the sorted element lists.
bool witness_before(const Subset& a, const Subset& b);

}  // namespace equilab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "equilab/graph.hpp"
#include "equilab/verdict.hpp"

namespace equilab {

/// A set of pairwise disjoint edges of a host graph.
struct Matching {
    EdgeSet edges;

    std::size_t size() const noexcept { return edges.size(); }
    bool valid_for(const Graph& g) const;
    /// V(M) as a per-vertex mask.
    std::vector<bool> covered(const Graph& g) const;
    VertexSet covered_vertices(const Graph& g) const;
    bool operator==(const Matching&) const = default;
};

/// X on one side with |N(X)| < |X| + deficiency, neighbourhoods taken in the
/// host graph minus `blocked`.
struct HallViolator {
    VertexSet subset;
    VertexSet neighborhood;
    int deficiency = 0;
    std::string context;

    bool valid_for(const Graph& g, const std::vector<bool>& blocked = {}) const;
};

/// A matching whose uncovered vertices are all leaves of the host graph.
struct InternalMatching {
    Matching matching;
    VertexSet uncovered;

    bool valid_for(const Graph& g) const;
};

Matching max_matching_bipartite(const Graph& g, const Bipartition& b);

/// Matching covering every vertex of `targets` (all on one side of b) using
/// only vertices outside `blocked`, or a Hall violator inside `targets`.
std::variant<Matching, HallViolator> saturating_matching(const Graph& g, const Bipartition& b, const VertexSet& targets,
                                                         const std::vector<bool>& blocked = {});

/// Dulmage-Mendelsohn merge: M within M_A ∪ M_B covering (A ∩ V(M_A)) ∪ (B ∩ V(M_B)).
Matching dm_merge(const Graph& g, const Bipartition& b, const Matching& m_a, const Matching& m_b);

/// Matching covering all of `required`, avoiding `blocked`, or a Hall violator.
std::variant<Matching, HallViolator> matching_covering(const Graph& g, const Bipartition& b, const VertexSet& required,
                                                       const std::vector<bool>& blocked = {});

enum class Coverage { perfect, internal };

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct ExtensionResult {
    Answer answer = Answer::unknown;
    /// Extension containing the input matching when answer == yes.
    Matching extension;
    /// Hall-based proof of impossibility (bipartite hosts only).
    std::optional<HallViolator> violator;
    std::uint64_t steps = 0;
};

/// Extends M to a perfect (or perfect internal) matching. Bipartite hosts use
/// Hall saturation plus the merge; other hosts fall back to exhaustive
/// branch-and-bound limited by `budget`.
ExtensionResult extend_matching(const Graph& g, const std::optional<Bipartition>& b, const Matching& m, Coverage coverage,
                                std::uint64_t budget = kDefaultSearchBudget);

struct InternalExtension {
    Answer answer = Answer::unknown;
    std::optional<InternalMatching> result;
    std::optional<HallViolator> violator;
};

InternalExtension extend_to_perfect_internal(const Graph& g, const std::optional<Bipartition>& b, const Matching& m,
                                             std::uint64_t budget = kDefaultSearchBudget);

struct ExtendabilityResult {
    Answer answer = Answer::unknown;
    /// Lexicographically smallest k-matching that does not extend.
    std::optional<Matching> failing;
    std::optional<HallViolator> violator;
    bool no_k_matching = false;
    std::optional<BudgetNote> budget;
};

/// k in {1, 2}; g must be connected (InputError otherwise).
ExtendabilityResult is_k_internally_extendable(const Graph& g, int k, std::uint64_t budget = kDefaultSearchBudget);
/// k in {1, 2}; g connected with at least 2k vertices.
ExtendabilityResult is_k_extendable(const Graph& g, int k, std::uint64_t budget = kDefaultSearchBudget);

struct PlummerResult {
    bool holds = false;
    bool balanced = false;
    std::optional<VertexSet> violating;
};

inline constexpr int kPlummerMaxSide = 20;

/// Brute force over X ⊆ A, |X| <= |A| - k, of |N(X)| >= |X| + k, plus |A| = |B|.
PlummerResult plummer_condition(const Graph& g, const Bipartition& b, int k);

/// Every k-matching of g in lexicographic order of edge ids.
std::vector<Matching> k_matchings(const Graph& g, int k);

}  // namespace equilab

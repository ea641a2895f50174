#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equilab/equicert.hpp"
#include "equilab/graph.hpp"
#include "equilab/matching.hpp"
#include "equilab/verdict.hpp"

namespace equilab {

/// v1 v2 v3 v4 v5 with deg(v3) = 2.
struct P5Verdict {
    Answer answer = Answer::unknown;
    std::optional<std::array<Vertex, 5>> path;

    bool valid_for(const Graph& g) const;
};

P5Verdict is_p5_constrained(const Graph& g);

enum class ComponentKind { star, two_internally_extendable, neither };
std::string_view to_string(ComponentKind k);

struct ComponentTag {
    int component = 0;
    Graph graph;  // induced component, labels inherited
    ComponentKind kind = ComponentKind::neither;
    /// Result of the 2-internal-extendability check (absent for stars).
    std::optional<ExtendabilityResult> check;
};

struct ComponentClassification {
    std::vector<ComponentTag> components;
    /// Some component could not be decided within budget.
    bool incomplete = false;

    bool all_good() const;
    /// Re-derives every tag.
    bool valid_for(const Graph& g) const;
};

bool is_star(const Graph& g);
/// Throws InputError on isolated vertices.
ComponentClassification component_classification(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

struct BipartiteVerdict {
    Answer answer = Answer::unknown;
    std::optional<ComponentClassification> classification;
    std::optional<Matching> failing;
    std::optional<HallViolator> violator;
    std::optional<BudgetNote> budget;
};

/// Every 2-matching extends to a perfect internal matching. Throws
/// InputError on non-bipartite input or isolated vertices.
BipartiteVerdict recognize_equistarable_bipartite(const Graph& g);

/// Every degree-2 vertex has a leaf neighbour; linear time. Throws
/// InputError on cyclic input or isolated vertices.
P5Verdict recognize_equistarable_forest(const Graph& g);

struct TriangleViolation {
    VertexSet stable;
    Vertex u = 0;
    Vertex v = 0;
};

struct TriangleVerdict {
    Answer answer = Answer::unknown;
    std::optional<TriangleViolation> violation;
    std::optional<BudgetNote> budget;

    bool valid_for(const Graph& g) const;
};

TriangleVerdict triangle_condition(const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);

struct GeneralPartitionVerdict {
    Answer answer = Answer::unknown;
    /// One strong clique per edge id when yes.
    std::vector<VertexSet> strong_clique;
    /// An edge in no strong clique when no.
    std::optional<EdgeId> failing_edge;
    std::optional<BudgetNote> budget;

    bool valid_for(const Graph& g) const;
};

bool is_strong_clique(const std::vector<VertexSet>& stable_sets, const VertexSet& clique);
GeneralPartitionVerdict general_partition(const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);

struct Table1Budgets {
    std::uint64_t enumeration = kDefaultEnumerationBudget;
    int exhaustive_ground = kDefaultExhaustiveGround;
    int strong_ground = kDefaultStrongGround;
    std::uint64_t seed = 0;
};

struct Table1Row {
    std::string name;
    Answer left = Answer::unknown;
    Answer right = Answer::unknown;
};

struct Table1Report {
    /// Rows top to bottom: general partition, strong, equi, triangle/P5.
    std::array<Table1Row, 4> rows;
    std::vector<std::string> violations;
    bool partial = false;
};

/// Throws InputError if g has a triangle, no edge, or an isolated vertex.
Table1Report crosscheck_table1(const Graph& g, const Table1Budgets& budgets = {});

}  // namespace equilab

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "equilab/graph.hpp"

namespace equilab {

/// A graph whose vertex i stands for edge i of a source graph.
struct LabeledLineGraph {
    Graph graph;
    /// Source edge endpoints for every vertex, in the source's ids.
    std::vector<Edge> edge_of_vertex;
};

LabeledLineGraph line_graph(const Graph& g);
Graph complement(const Graph& g);
/// Complement of the line graph. Throws InputError on an edgeless source.
LabeledLineGraph co_line(const Graph& g);

/// Vertex (a, b) is labelled "(a,b)"; ids are a * |V(h)| + b.
Graph tensor_product(const Graph& g, const Graph& h);

/// Side-by-side copies; labels get the suffixes ".1" and ".2".
Graph disjoint_union(const Graph& g, const Graph& h);

inline constexpr std::uint64_t kDefaultIsomorphismBudget = 10'000'000;

struct NotIsomorphic {};
struct IsomorphismBudgetExhausted {
    std::uint64_t steps = 0;
};
/// mapping[v] is the image in h of vertex v of g.
using IsomorphismMapping = std::vector<Vertex>;
using IsomorphismResult = std::variant<IsomorphismMapping, NotIsomorphic, IsomorphismBudgetExhausted>;

IsomorphismResult is_isomorphic(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultIsomorphismBudget);
bool verify_isomorphism(const Graph& g, const Graph& h, const IsomorphismMapping& mapping);

/// Cheap isomorphism invariant: per-vertex (degree, sorted neighbour degrees), sorted.
std::vector<std::vector<int>> degree_profile(const Graph& g);

}  // namespace equilab

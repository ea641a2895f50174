#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace equilab {

using Vertex = int;
using EdgeId = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Thrown for malformed input graphs, descriptors and labels.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Simple undirected graph with external string labels and dense internal ids.
///
/// Edges are stored once as (u, v) with u < v, sorted lexicographically; the
/// position in that order is the edge id. Values are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from labels and an edge list. Duplicate edges collapse;
    /// self-loops, out-of-range ids and repeated labels throw InputError.
    Graph(std::vector<std::string> labels, std::vector<Edge> edges);

    /// Vertices 0..n-1 labelled by their decimal id.
    static Graph with_default_labels(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    /// Edge ids incident to v, ascending.
    std::span<const EdgeId> incident_edges(Vertex v) const { return incidence_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(Vertex u, Vertex v) const;
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
    /// "u-v" in external labels, u the smaller id.
    std::string edge_label(EdgeId e) const;
    /// Accepts "a-b" in either orientation.
    std::optional<EdgeId> find_edge(std::string_view edge_label) const;

    bool has_isolated_vertex() const;
    int min_degree() const;

    bool operator==(const Graph& other) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::unordered_map<std::string, Vertex> index_;
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Canonical edge-list text. Re-parsing yields an identical Graph: "v" lines
/// are emitted where first-appearance order would otherwise differ from ids.
std::string to_edge_list(const Graph& g);

/// Subgraph induced by `vertices` (sorted), keeping labels; vertex i of the
/// result is vertices[i].
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

struct ComponentDecomposition {
    std::vector<int> component_of;
    int count = 0;
    std::vector<VertexSet> vertices;
    std::vector<EdgeSet> edges;
};

ComponentDecomposition components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
    std::vector<bool> in_a;

    bool valid_for(const Graph& g) const;
};

/// Closed walk v0 v1 ... v(k-1) v0 of odd length k.
struct OddCycle {
    std::vector<Vertex> walk;

    bool valid_for(const Graph& g) const;
};

std::variant<Bipartition, OddCycle> bipartition(const Graph& g);
std::optional<Bipartition> try_bipartition(const Graph& g);

/// Lexicographically smallest triangle (u < v < w), if any.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);
inline bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

bool is_forest(const Graph& g);

struct Enumeration {
    std::vector<VertexSet> sets;
    bool exhausted = false;
    std::uint64_t steps = 0;
};

/// Inclusion-maximal cliques, Bron-Kerbosch with pivoting, sorted lexicographically.
Enumeration enumerate_maximal_cliques(const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);
/// Inclusion-maximal stable sets (maximal cliques of the complement).
Enumeration enumerate_maximal_stable_sets(const Graph& g, std::uint64_t budget = kDefaultEnumerationBudget);

/// Renders a vertex set as "{a,b,c}" in external labels.
std::string format_vertices(const Graph& g, const VertexSet& vs);

}  // namespace equilab

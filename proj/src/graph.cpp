#include "equilab/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace equilab {

ParseError::ParseError(int line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
    const int n = vertex_count();
    index_.reserve(labels_.size());
    for (int v = 0; v < n; ++v) {
        if (labels_[static_cast<std::size_t>(v)].empty()) throw InputError("empty vertex label");
        if (!index_.emplace(labels_[static_cast<std::size_t>(v)], v).second) {
            throw InputError("duplicate vertex label '" + labels_[static_cast<std::size_t>(v)] + "'");
        }
    }
    for (auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
        if (e.u == e.v) throw InputError("self-loop at '" + labels_[static_cast<std::size_t>(e.u)] + "'");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.assign(static_cast<std::size_t>(n), {});
    incidence_.assign(static_cast<std::size_t>(n), {});
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    for (int v = 0; v < n; ++v) {
        adjacency_[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]));
        incidence_[static_cast<std::size_t>(v)].reserve(static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]));
    }
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const auto& e = edges_[static_cast<std::size_t>(id)];
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
        incidence_[static_cast<std::size_t>(e.u)].push_back(id);
        incidence_[static_cast<std::size_t>(e.v)].push_back(id);
    }
    // Sorted edge order already leaves every adjacency list ascending.
}

Graph Graph::with_default_labels(int vertex_count, std::vector<Edge> edges) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
    return Graph(std::move(labels), std::move(edges));
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

std::string Graph::edge_label(EdgeId e) const {
    const auto& ed = edge(e);
    return label(ed.u) + "-" + label(ed.v);
}

std::optional<EdgeId> Graph::find_edge(std::string_view edge_label) const {
    // Labels may themselves contain '-', so try every split point.
    for (std::size_t pos = edge_label.find('-'); pos != std::string_view::npos; pos = edge_label.find('-', pos + 1)) {
        auto u = find(edge_label.substr(0, pos));
        auto v = find(edge_label.substr(pos + 1));
        if (u && v) {
            if (auto id = edge_id(*u, *v)) return id;
        }
    }
    return std::nullopt;
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& adj) { return adj.empty(); });
}

int Graph::min_degree() const {
    int best = 0;
    for (int v = 0; v < vertex_count(); ++v) best = (v == 0) ? degree(v) : std::min(best, degree(v));
    return best;
}

bool Graph::operator==(const Graph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    std::vector<Edge> edges;
    auto intern = [&](std::string_view token) {
        auto [it, inserted] = index.emplace(std::string(token), static_cast<Vertex>(labels.size()));
        if (inserted) labels.emplace_back(token);
        return it->second;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) throw ParseError(line_no, "expected two labels, got " + std::to_string(tokens.size()) + " tokens");
        if (tokens[0] == "v") {
            intern(tokens[1]);
            continue;
        }
        if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop at '" + std::string(tokens[0]) + "'");
        Vertex u = intern(tokens[0]);
        Vertex v = intern(tokens[1]);
        edges.push_back({u, v});
    }
    return Graph(std::move(labels), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    // Parsing numbers vertices by first appearance, so vertices are
    // introduced in id order: through an edge to an earlier vertex, through
    // the edge to the next id, or by a "v" line when neither exists.
    std::ostringstream out;
    const int n = g.vertex_count();
    std::vector<bool> printed(static_cast<std::size_t>(g.edge_count()), false);
    auto print = [&](EdgeId e) {
        if (printed[static_cast<std::size_t>(e)]) return;
        printed[static_cast<std::size_t>(e)] = true;
        out << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << '\n';
    };
    auto print_back_edges = [&](Vertex v) {
        for (EdgeId e : g.incident_edges(v))
            if (g.edge(e).v == v) print(e);
    };
    for (Vertex x = 0; x < n;) {
        const auto nb = g.neighbors(x);
        if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return w < x; })) {
            print_back_edges(x);
            x += 1;
        } else if (x + 1 < n && g.adjacent(x, x + 1)) {
            print(*g.edge_id(x, x + 1));
            print_back_edges(x + 1);
            x += 2;
        } else {
            out << "v " << g.label(x) << '\n';
            x += 1;
        }
    }
    return out.str();
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
        labels.push_back(g.label(vertices[i]));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        int a = local[static_cast<std::size_t>(e.u)];
        int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b});
    }
    return Graph(std::move(labels), std::move(edges));
}

// ---------------------------------------------------------------------------
// Structure

ComponentDecomposition components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentDecomposition out;
    out.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        if (out.component_of[static_cast<std::size_t>(s)] >= 0) continue;
        const int c = out.count++;
        queue.clear();
        queue.push_back(s);
        out.component_of[static_cast<std::size_t>(s)] = c;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (out.component_of[static_cast<std::size_t>(w)] < 0) {
                    out.component_of[static_cast<std::size_t>(w)] = c;
                    queue.push_back(w);
                }
            }
        }
    }
    out.vertices.assign(static_cast<std::size_t>(out.count), {});
    out.edges.assign(static_cast<std::size_t>(out.count), {});
    for (Vertex v = 0; v < n; ++v) out.vertices[static_cast<std::size_t>(out.component_of[static_cast<std::size_t>(v)])].push_back(v);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out.edges[static_cast<std::size_t>(out.component_of[static_cast<std::size_t>(g.edge(e).u)])].push_back(e);
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).count <= 1; }

bool Bipartition::valid_for(const Graph& g) const {
    if (in_a.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    if (side_a.size() + side_b.size() != in_a.size()) return false;
    for (Vertex v : side_a) if (!in_a[static_cast<std::size_t>(v)]) return false;
    for (Vertex v : side_b) if (in_a[static_cast<std::size_t>(v)]) return false;
    for (const auto& e : g.edges()) {
        if (in_a[static_cast<std::size_t>(e.u)] == in_a[static_cast<std::size_t>(e.v)]) return false;
    }
    return true;
}

bool OddCycle::valid_for(const Graph& g) const {
    if (walk.size() % 2 == 0) return false;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (!g.adjacent(walk[i], walk[(i + 1) % walk.size()])) return false;
    }
    return true;
}

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] >= 0) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] < 0) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
                    // Tree paths from u and w meet at their lowest common ancestor.
                    std::vector<Vertex> left{u}, right{w};
                    Vertex a = u, b = w;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) left.push_back(a = parent[static_cast<std::size_t>(a)]);
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) right.push_back(b = parent[static_cast<std::size_t>(b)]);
                    while (a != b) {
                        left.push_back(a = parent[static_cast<std::size_t>(a)]);
                        right.push_back(b = parent[static_cast<std::size_t>(b)]);
                    }
                    right.pop_back();  // lca already in left
                    OddCycle cycle;
                    cycle.walk = std::move(left);
                    cycle.walk.insert(cycle.walk.end(), right.rbegin(), right.rend());
                    return cycle;
                }
            }
        }
    }
    Bipartition b;
    b.in_a.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const bool a = color[static_cast<std::size_t>(v)] == 0;
        b.in_a[static_cast<std::size_t>(v)] = a;
        (a ? b.side_a : b.side_b).push_back(v);
    }
    return b;
}

std::optional<Bipartition> try_bipartition(const Graph& g) {
    auto r = bipartition(g);
    if (auto* b = std::get_if<Bipartition>(&r)) return std::move(*b);
    return std::nullopt;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    for (const auto& e : g.edges()) {
        auto nu = g.neighbors(e.u);
        auto nv = g.neighbors(e.v);
        auto i = std::upper_bound(nu.begin(), nu.end(), e.v);
        auto j = std::upper_bound(nv.begin(), nv.end(), e.v);
        while (i != nu.end() && j != nv.end()) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else return std::array<Vertex, 3>{e.u, e.v, *i};
        }
    }
    return std::nullopt;
}

bool is_forest(const Graph& g) {
    return g.edge_count() == g.vertex_count() - components(g).count;
}

// ---------------------------------------------------------------------------
// Bron-Kerbosch

namespace {

using Bits = boost::dynamic_bitset<>;

struct CliqueSearch {
    const std::vector<Bits>& adj;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    bool exhausted = false;
    std::vector<VertexSet> found;
    VertexSet current;

    void run(Bits candidates, Bits excluded) {
        if (exhausted) return;
        if (++steps > budget) {
            exhausted = true;
            return;
        }
        if (candidates.none()) {
            if (excluded.none()) {
                VertexSet s = current;
                std::sort(s.begin(), s.end());
                found.push_back(std::move(s));
            }
            return;
        }
        // Pivot: most candidate neighbours, ties to the smallest id.
        std::size_t pivot = Bits::npos;
        std::size_t best = 0;
        Bits pool = candidates | excluded;
        for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
            std::size_t score = (candidates & adj[u]).count();
            if (pivot == Bits::npos || score > best) {
                pivot = u;
                best = score;
            }
        }
        Bits branch = candidates - adj[pivot];
        for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
            current.push_back(static_cast<Vertex>(v));
            run(candidates & adj[v], excluded & adj[v]);
            current.pop_back();
            if (exhausted) return;
            candidates.reset(v);
            excluded.set(v);
        }
    }
};

Enumeration maximal_cliques_of(std::vector<Bits> adj, std::uint64_t budget) {
    const std::size_t n = adj.size();
    CliqueSearch search{adj, budget};
    Bits all(n);
    all.set();
    search.run(all, Bits(n));
    Enumeration out;
    out.exhausted = search.exhausted;
    out.steps = search.steps;
    out.sets = std::move(search.found);
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::vector<Bits> adjacency_bits(const Graph& g, bool complemented) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj[v].set(static_cast<std::size_t>(w));
        if (complemented) {
            adj[v].flip();
            adj[v].reset(v);
        }
    }
    return adj;
}

}  // namespace

Enumeration enumerate_maximal_cliques(const Graph& g, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("enumeration budget must be positive");
    if (g.vertex_count() == 0) return {};
    return maximal_cliques_of(adjacency_bits(g, false), budget);
}

Enumeration enumerate_maximal_stable_sets(const Graph& g, std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("enumeration budget must be positive");
    if (g.vertex_count() == 0) return {};
    return maximal_cliques_of(adjacency_bits(g, true), budget);
}

std::string format_vertices(const Graph& g, const VertexSet& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += g.label(vs[i]);
    }
    return s + "}";
}

}  // namespace equilab

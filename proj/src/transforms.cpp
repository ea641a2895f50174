#include "equilab/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace equilab {

LabeledLineGraph line_graph(const Graph& g) {
    LabeledLineGraph out;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        labels.push_back(g.edge_label(e));
        out.edge_of_vertex.push_back(g.edge(e));
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) edges.push_back({inc[i], inc[j]});
        }
    }
    out.graph = Graph(std::move(labels), std::move(edges));
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        auto adj = g.neighbors(u);
        auto it = std::upper_bound(adj.begin(), adj.end(), u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (it != adj.end() && *it == v) {
                ++it;
                continue;
            }
            edges.push_back({u, v});
        }
    }
    return Graph({g.labels().begin(), g.labels().end()}, std::move(edges));
}

LabeledLineGraph co_line(const Graph& g) {
    if (g.edge_count() == 0) throw InputError("co_line needs at least one edge");
    auto lg = line_graph(g);
    lg.graph = complement(lg.graph);
    return lg;
}

Graph tensor_product(const Graph& g, const Graph& h) {
    const int nh = h.vertex_count();
    std::vector<std::string> labels;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        for (const auto& f : h.edges()) {
            edges.push_back({e.u * nh + f.u, e.v * nh + f.v});
            edges.push_back({e.u * nh + f.v, e.v * nh + f.u});
        }
    }
    return Graph(std::move(labels), std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    std::vector<std::string> labels;
    for (const auto& l : g.labels()) labels.push_back(l + ".1");
    for (const auto& l : h.labels()) labels.push_back(l + ".2");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
    return Graph(std::move(labels), std::move(edges));
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& row = inv[static_cast<std::size_t>(v)];
        row.push_back(g.degree(v));
        for (Vertex w : g.neighbors(v)) row.push_back(g.degree(w));
        std::sort(row.begin() + 1, row.end());
    }
    return inv;
}

struct Matcher {
    const Graph& g;
    const Graph& h;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    bool exhausted = false;
    std::vector<std::vector<int>> inv_g, inv_h;
    std::vector<Vertex> order;  // g's vertices in search order
    std::vector<Vertex> map_g, map_h;

    bool consistent(Vertex v, Vertex w) const {
        if (inv_g[static_cast<std::size_t>(v)] != inv_h[static_cast<std::size_t>(w)]) return false;
        // Adjacency to already-mapped vertices must agree both ways.
        for (Vertex x : g.neighbors(v)) {
            Vertex y = map_g[static_cast<std::size_t>(x)];
            if (y >= 0 && !h.adjacent(w, y)) return false;
        }
        int mapped_nbrs_g = 0, mapped_nbrs_h = 0;
        for (Vertex x : g.neighbors(v)) mapped_nbrs_g += map_g[static_cast<std::size_t>(x)] >= 0;
        for (Vertex y : h.neighbors(w)) mapped_nbrs_h += map_h[static_cast<std::size_t>(y)] >= 0;
        return mapped_nbrs_g == mapped_nbrs_h;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        if (++steps > budget) {
            exhausted = true;
            return false;
        }
        Vertex v = order[depth];
        for (Vertex w = 0; w < h.vertex_count(); ++w) {
            if (map_h[static_cast<std::size_t>(w)] >= 0 || !consistent(v, w)) continue;
            map_g[static_cast<std::size_t>(v)] = w;
            map_h[static_cast<std::size_t>(w)] = v;
            if (search(depth + 1)) return true;
            map_g[static_cast<std::size_t>(v)] = -1;
            map_h[static_cast<std::size_t>(w)] = -1;
            if (exhausted) return false;
        }
        return false;
    }
};

// BFS order from the highest-degree vertex of each component keeps the
// already-mapped neighbourhood constraining.
std::vector<Vertex> search_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex s : by_degree) {
        if (placed[static_cast<std::size_t>(s)]) continue;
        placed[static_cast<std::size_t>(s)] = true;
        std::size_t head = order.size();
        order.push_back(s);
        for (; head < order.size(); ++head) {
            for (Vertex w : g.neighbors(order[head])) {
                if (!placed[static_cast<std::size_t>(w)]) {
                    placed[static_cast<std::size_t>(w)] = true;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

}  // namespace

std::vector<std::vector<int>> degree_profile(const Graph& g) {
    auto inv = vertex_invariants(g);
    std::sort(inv.begin(), inv.end());
    return inv;
}

bool verify_isomorphism(const Graph& g, const Graph& h, const IsomorphismMapping& mapping) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (mapping.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    std::vector<bool> hit(mapping.size(), false);
    for (Vertex w : mapping) {
        if (w < 0 || w >= h.vertex_count() || hit[static_cast<std::size_t>(w)]) return false;
        hit[static_cast<std::size_t>(w)] = true;
    }
    // Equal edge counts plus edge images in h give adjacency both ways.
    for (const auto& e : g.edges()) {
        if (!h.adjacent(mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)])) return false;
    }
    return true;
}

IsomorphismResult is_isomorphic(const Graph& g, const Graph& h, std::uint64_t budget) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return NotIsomorphic{};
    Matcher m{g, h, budget};
    m.inv_g = vertex_invariants(g);
    m.inv_h = vertex_invariants(h);
    {
        auto a = m.inv_g, b = m.inv_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return NotIsomorphic{};
    }
    m.order = search_order(g);
    m.map_g.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    m.map_h.assign(static_cast<std::size_t>(h.vertex_count()), -1);
    if (m.search(0)) {
        IsomorphismMapping mapping = m.map_g;
        if (!verify_isomorphism(g, h, mapping)) throw std::logic_error("isomorphism search returned an invalid mapping");
        return mapping;
    }
    if (m.exhausted) return IsomorphismBudgetExhausted{m.steps};
    return NotIsomorphic{};
}

}  // namespace equilab

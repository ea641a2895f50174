#pragma once

// Brute-force oracles written directly from the definitions. They share no
// code with the library beyond the Graph container and Rational type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "equilab/equicert.hpp"
#include "equilab/graph.hpp"

namespace oracle {

using equilab::Graph;
using equilab::Rational;
using equilab::Vertex;
using equilab::VertexSet;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    return a;
}

inline VertexSet set_of(std::uint32_t mask) {
    VertexSet out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) out.push_back(i);
    return out;
}

// Maximal sets among those satisfying `ok`, sorted lexicographically.
inline std::vector<VertexSet> maximal_sets(const Graph& g, bool stable) {
    const int n = g.vertex_count();
    const auto a = adjacency(g);
    auto ok = [&](std::uint32_t m) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((m >> i & 1u) && (m >> j & 1u) && a[i][j] == stable) return false;
        return true;
    };
    std::vector<VertexSet> out;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        if (!ok(m)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1u) && ok(m | (1u << v))) maximal = false;
        if (maximal) out.push_back(set_of(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}
inline std::vector<VertexSet> maximal_stable_sets(const Graph& g) { return maximal_sets(g, true); }
inline std::vector<VertexSet> maximal_cliques(const Graph& g) { return maximal_sets(g, false); }

// Every matching of g as a sorted edge-id list.
inline std::vector<std::vector<int>> all_matchings(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    std::function<void(int)> rec = [&](int next) {
        out.push_back(cur);
        for (int e = next; e < g.edge_count(); ++e) {
            const auto& ed = g.edge(e);
            if (used[ed.u] || used[ed.v]) continue;
            used[ed.u] = used[ed.v] = true;
            cur.push_back(e);
            rec(e + 1);
            cur.pop_back();
            used[ed.u] = used[ed.v] = false;
        }
    };
    rec(0);
    return out;
}

inline bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Some matching containing m leaves only leaves (internal) or nothing (perfect) uncovered.
inline bool extends(const Graph& g, const std::vector<int>& m, bool internal) {
    for (const auto& x : all_matchings(g)) {
        if (!contains_all(x, m)) continue;
        std::vector<bool> cov(static_cast<std::size_t>(g.vertex_count()), false);
        for (int e : x) cov[g.edge(e).u] = cov[g.edge(e).v] = true;
        bool good = true;
        for (Vertex v = 0; v < g.vertex_count() && good; ++v)
            if (!cov[v] && (!internal || g.degree(v) != 1)) good = false;
        if (good) return true;
    }
    return false;
}

// Definition: a k-matching exists and every one extends.
inline bool k_extendable(const Graph& g, int k, bool internal) {
    bool any = false;
    for (const auto& m : all_matchings(g)) {
        if (static_cast<int>(m.size()) != k) continue;
        any = true;
        if (!extends(g, m, internal)) return false;
    }
    return any;
}

// Some 5-vertex path (not necessarily induced) has a degree-2 middle vertex.
inline bool has_bad_p5(const Graph& g) {
    const int n = g.vertex_count();
    const auto a = adjacency(g);
    for (int v3 = 0; v3 < n; ++v3) {
        if (g.degree(v3) != 2) continue;
        for (int v2 = 0; v2 < n; ++v2)
            for (int v4 = 0; v4 < n; ++v4)
                for (int v1 = 0; v1 < n; ++v1)
                    for (int v5 = 0; v5 < n; ++v5) {
                        const int p[5] = {v1, v2, v3, v4, v5};
                        bool distinct = true;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j) distinct = distinct && p[i] != p[j];
                        if (distinct && a[v1][v2] && a[v2][v3] && a[v3][v4] && a[v4][v5]) return true;
                    }
    }
    return false;
}

inline bool bipartite(const Graph& g) {
    const int n = g.vertex_count();
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (const auto& e : g.edges()) ok = ok && ((m >> e.u & 1u) != (m >> e.v & 1u));
        if (ok) return true;
    }
    return false;
}

inline bool triangle_free(const Graph& g) {
    const auto a = adjacency(g);
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (a[i][j] && a[j][k] && a[i][k]) return false;
    return true;
}

// Subsets of the ground set whose weight is exactly 1, by direct summation.
inline std::vector<equilab::Subset> unit_subsets(int n, const equilab::RationalVector& w) {
    std::vector<equilab::Subset> out;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
        Rational t = 0;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) t += w[i];
        if (t == 1) out.push_back(set_of(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool weighting_ok(const equilab::SetSystem& s, const equilab::RationalVector& w) {
    auto fam = s.family;
    for (auto& f : fam) std::sort(f.begin(), f.end());
    std::sort(fam.begin(), fam.end());
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > 0; }) && unit_subsets(s.ground_size, w) == fam;
}

// Maximal stars straight from the definition: the edge set of a star
// (all edges at a vertex) not properly contained in another star.
inline std::vector<std::vector<int>> maximal_stars(const Graph& g) {
    std::vector<std::vector<int>> stars;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> s(g.incident_edges(v).begin(), g.incident_edges(v).end());
        stars.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (const auto& s : stars) {
        bool maximal = true;
        for (const auto& t : stars)
            if (t.size() > s.size() && contains_all(t, s)) maximal = false;
        if (maximal && !s.empty() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every edge lies in a clique that meets every maximal stable set.
inline bool general_partition(const Graph& g) {
    const auto stables = maximal_stable_sets(g);
    const auto a = adjacency(g);
    const int n = g.vertex_count();
    for (const auto& e : g.edges()) {
        bool found = false;
        for (std::uint32_t m = 0; m < (1u << n) && !found; ++m) {
            if (!(m >> e.u & 1u) || !(m >> e.v & 1u)) continue;
            bool clique = true;
            for (int i = 0; i < n && clique; ++i)
                for (int j = i + 1; j < n && clique; ++j)
                    if ((m >> i & 1u) && (m >> j & 1u) && !a[i][j]) clique = false;
            if (!clique) continue;
            bool strong = true;
            for (const auto& s : stables) {
                bool meets = false;
                for (Vertex x : s) meets = meets || (m >> x & 1u);
                strong = strong && meets;
            }
            found = strong;
        }
        if (!found) return false;
    }
    return true;
}

// For every maximal stable S and edge uv missing S, some s in S forms a triangle with uv.
inline bool triangle_condition(const Graph& g) {
    const auto a = adjacency(g);
    for (const auto& s : maximal_stable_sets(g)) {
        for (const auto& e : g.edges()) {
            if (std::count(s.begin(), s.end(), e.u) || std::count(s.begin(), s.end(), e.v)) continue;
            bool found = false;
            for (Vertex x : s) found = found || (a[x][e.u] && a[x][e.v]);
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace oracle

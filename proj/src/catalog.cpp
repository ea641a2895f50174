#include "equilab/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "equilab/transforms.hpp"

namespace equilab {

namespace {

class IsoClasses {
public:
    bool insert(const Graph& g) {
        auto& bucket = buckets_[Key{g.edge_count(), degree_profile(g)}];
        for (const Graph& h : bucket) {
            const auto r = is_isomorphic(g, h);
            if (std::holds_alternative<IsomorphismBudgetExhausted>(r)) throw std::runtime_error("isomorphism budget exhausted");
            if (std::holds_alternative<IsomorphismMapping>(r)) return false;
        }
        bucket.push_back(g);
        order_.push_back(g);
        return true;
    }
    std::vector<Graph> take() { return std::move(order_); }

private:
    using Key = std::pair<int, std::vector<std::vector<int>>>;
    std::map<Key, std::vector<Graph>> buckets_;
    std::vector<Graph> order_;
};

std::vector<Edge> edges_of(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

}  // namespace

bool belongs_to(const Graph& g, GraphClass cls) {
    switch (cls) {
        case GraphClass::any: return true;
        case GraphClass::triangle_free: return is_triangle_free(g);
        case GraphClass::bipartite: return try_bipartition(g).has_value();
        case GraphClass::forest: return is_forest(g);
    }
    return false;
}

namespace {

std::vector<std::vector<Graph>> connected_levels(int max_n, GraphClass cls) {
    if (max_n < 1) throw std::invalid_argument("need at least one vertex");
    if (max_n > 12) throw std::invalid_argument("catalog is limited to 12 vertices");
    std::vector<std::vector<Graph>> levels{{Graph::with_default_labels(1, {})}};
    for (int n = 2; n <= max_n; ++n) {
        IsoClasses classes;
        const Vertex fresh = n - 1;
        for (const Graph& parent : levels.back()) {
            for (std::uint32_t s = 1; s < (1u << (n - 1)); ++s) {
                if (cls == GraphClass::forest && std::popcount(s) != 1) continue;
                auto edges = edges_of(parent);
                for (Vertex v = 0; v < n - 1; ++v)
                    if (s >> v & 1u) edges.push_back({v, fresh});
                Graph g = Graph::with_default_labels(n, std::move(edges));
                if (belongs_to(g, cls)) classes.insert(g);
            }
        }
        levels.push_back(classes.take());
    }
    return levels;
}

}  // namespace

std::vector<Graph> connected_graphs(int n, GraphClass cls) { return connected_levels(n, cls).back(); }

std::vector<Graph> connected_graphs_up_to(int max_n, GraphClass cls, int min_n) {
    std::vector<Graph> out;
    if (max_n < 1) return out;
    auto levels = connected_levels(max_n, cls);
    for (int n = std::max(min_n, 1); n <= max_n; ++n) {
        auto& level = levels[static_cast<std::size_t>(n - 1)];
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

std::vector<Graph> forests_without_isolated(int max_n) {
    // trees[k]: trees on k vertices, k >= 2; forests are nondecreasing
    // sequences of (size, index) pairs.
    std::vector<std::vector<Graph>> trees(static_cast<std::size_t>(std::max(max_n, 1)) + 1);
    if (max_n >= 2) {
        auto levels = connected_levels(max_n, GraphClass::forest);
        for (int k = 2; k <= max_n; ++k) trees[static_cast<std::size_t>(k)] = std::move(levels[static_cast<std::size_t>(k - 1)]);
    }
    std::vector<std::pair<int, int>> parts;
    std::vector<Graph> out;
    auto emit = [&] {
        int n = 0;
        std::vector<Edge> edges;
        for (auto [k, i] : parts) {
            for (const auto& e : trees[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].edges()) edges.push_back({e.u + n, e.v + n});
            n += k;
        }
        out.push_back(Graph::with_default_labels(n, std::move(edges)));
    };
    auto grow = [&](auto&& self, int used, std::pair<int, int> least) -> void {
        if (!parts.empty()) emit();
        for (int k = least.first; used + k <= max_n; ++k) {
            const int count = static_cast<int>(trees[static_cast<std::size_t>(k)].size());
            for (int i = (k == least.first ? least.second : 0); i < count; ++i) {
                parts.emplace_back(k, i);
                self(self, used + k, std::pair<int, int>{k, i});
                parts.pop_back();
            }
        }
    };
    grow(grow, 0, {2, 0});
    std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.vertex_count() < b.vertex_count(); });
    return out;
}

Graph random_triangle_free(int n, int max_edges, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
        edges.push_back({std::min(a, b), std::max(a, b)});
    };
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<Edge> candidates;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) candidates.push_back({a, b});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::uniform_int_distribution<int> target_dist(n - 1, std::max(n - 1, max_edges));
    const int target = target_dist(rng);
    for (const auto& c : candidates) {
        if (static_cast<int>(edges.size()) >= target) break;
        bool closes = false;
        for (Vertex w = 0; w < n && !closes; ++w)
            closes = adj[static_cast<std::size_t>(c.u)][static_cast<std::size_t>(w)] && adj[static_cast<std::size_t>(c.v)][static_cast<std::size_t>(w)];
        if (!closes) add(c.u, c.v);
    }
    return Graph::with_default_labels(n, std::move(edges));
}

}  // namespace equilab

#include "equilab/recognizers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "equilab/transforms.hpp"

namespace equilab {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> adjacency_bits(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Bits> adj(n, Bits(n));
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
        adj[static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(e.u));
    }
    return adj;
}

Bits bits_of(const VertexSet& vs, std::size_t n) {
    Bits b(n);
    for (Vertex v : vs) b.set(static_cast<std::size_t>(v));
    return b;
}

void require_no_isolated(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) throw InputError("vertex " + g.label(v) + " is isolated");
    }
}

// Any 5-vertex path whose middle vertex has degree 2, by depth-first search
// over all simple paths; used to double-check yes verdicts.
bool has_bad_p5(const Graph& g) {
    std::vector<Vertex> path;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    std::function<bool(Vertex)> extend = [&](Vertex v) {
        path.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        bool found = false;
        if (path.size() == 5) {
            found = g.degree(path[2]) == 2;
        } else {
            for (Vertex w : g.neighbors(v)) {
                if (!used[static_cast<std::size_t>(w)] && extend(w)) {
                    found = true;
                    break;
                }
            }
        }
        used[static_cast<std::size_t>(v)] = false;
        path.pop_back();
        return found;
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (extend(v)) return true;
    }
    return false;
}

}  // namespace

bool P5Verdict::valid_for(const Graph& g) const {
    if (answer == Answer::yes) return !path && !has_bad_p5(g);
    if (answer != Answer::no || !path) return false;
    const auto& p = *path;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.vertex_count()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (p[i] == p[j]) return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.adjacent(p[i], p[i + 1])) return false;
    return g.degree(p[2]) == 2;
}

P5Verdict is_p5_constrained(const Graph& g) {
    P5Verdict out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        const Vertex x = g.neighbors(v)[0];
        const Vertex y = g.neighbors(v)[1];
        for (Vertex a : g.neighbors(x)) {
            if (a == v || a == y) continue;
            for (Vertex b : g.neighbors(y)) {
                if (b == v || b == x || b == a) continue;
                out.answer = Answer::no;
                out.path = std::array<Vertex, 5>{a, x, v, y, b};
                return out;
            }
        }
    }
    out.answer = Answer::yes;
    return out;
}

std::string_view to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::star: return "star";
        case ComponentKind::two_internally_extendable: return "two_internally_extendable";
        case ComponentKind::neither: return "neither";
    }
    return "neither";
}

bool is_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

bool ComponentClassification::all_good() const {
    return !incomplete && std::all_of(components.begin(), components.end(),
                                      [](const ComponentTag& t) { return t.kind != ComponentKind::neither; });
}

ComponentClassification component_classification(const Graph& g, std::uint64_t budget) {
    require_no_isolated(g);
    ComponentClassification out;
    const auto comps = components(g);
    for (int c = 0; c < comps.count; ++c) {
        ComponentTag tag;
        tag.component = c;
        tag.graph = induced_subgraph(g, comps.vertices[static_cast<std::size_t>(c)]);
        if (is_star(tag.graph)) {
            tag.kind = ComponentKind::star;
        } else {
            tag.check = is_k_internally_extendable(tag.graph, 2, budget);
            if (tag.check->answer == Answer::yes) {
                tag.kind = ComponentKind::two_internally_extendable;
            } else {
                tag.kind = ComponentKind::neither;
                out.incomplete = out.incomplete || tag.check->answer == Answer::unknown;
            }
        }
        out.components.push_back(std::move(tag));
    }
    return out;
}

bool ComponentClassification::valid_for(const Graph& g) const {
    const auto comps = equilab::components(g);
    if (static_cast<int>(components.size()) != comps.count) return false;
    for (const auto& tag : components) {
        if (!(tag.graph == induced_subgraph(g, comps.vertices[static_cast<std::size_t>(tag.component)]))) return false;
        if (tag.kind == ComponentKind::star) {
            if (!is_star(tag.graph)) return false;
            continue;
        }
        if (is_star(tag.graph) || !tag.check) return false;
        if (tag.kind == ComponentKind::two_internally_extendable) {
            if (tag.check->answer != Answer::yes) return false;
            continue;
        }
        const auto& chk = *tag.check;
        if (chk.answer == Answer::unknown) continue;
        if (chk.no_k_matching) {
            if (!k_matchings(tag.graph, 2).empty()) return false;
            continue;
        }
        if (!chk.failing || chk.failing->size() != 2 || !chk.failing->valid_for(tag.graph)) return false;
        if (extend_to_perfect_internal(tag.graph, try_bipartition(tag.graph), *chk.failing).answer != Answer::no) return false;
    }
    return true;
}

BipartiteVerdict recognize_equistarable_bipartite(const Graph& g) {
    require_no_isolated(g);
    const auto b = try_bipartition(g);
    if (!b) throw InputError("graph is not bipartite");
    BipartiteVerdict out;
    for (auto& m : k_matchings(g, 2)) {
        auto r = extend_to_perfect_internal(g, b, m);
        if (r.answer == Answer::no) {
            out.answer = Answer::no;
            out.failing = std::move(m);
            out.violator = std::move(r.violator);
            return out;
        }
        if (r.answer == Answer::unknown) {
            out.budget = BudgetNote{"matching extension search steps", kDefaultSearchBudget};
            return out;
        }
    }
    out.answer = Answer::yes;
    out.classification = component_classification(g);
    if (!out.classification->all_good()) throw std::logic_error("every 2-matching extends but a component is neither");
    return out;
}

P5Verdict recognize_equistarable_forest(const Graph& g) {
    // Streams the edge array only: degrees, acyclicity by union-find, and the
    // leaf-neighbour flags of degree-2 vertices.
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto edges = g.edges();
    std::vector<int> degree(n, 0);
    for (const auto& e : edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 0) throw InputError("vertex " + g.label(static_cast<Vertex>(v)) + " is isolated");

    std::vector<int> parent(n);
    for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<int>(v);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<char> has_leaf(n, 0);
    for (const auto& e : edges) {
        const int a = find(e.u), b = find(e.v);
        if (a == b) throw InputError("graph has a cycle");
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        if (degree[v] == 1) has_leaf[u] = 1;
        if (degree[u] == 1) has_leaf[v] = 1;
    }

    P5Verdict out;
    for (std::size_t i = 0; i < n; ++i) {
        if (degree[i] != 2 || has_leaf[i]) continue;
        const auto v = static_cast<Vertex>(i);
        const Vertex x = g.neighbors(v)[0];
        const Vertex y = g.neighbors(v)[1];
        const Vertex a = g.neighbors(x)[0] == v ? g.neighbors(x)[1] : g.neighbors(x)[0];
        const Vertex b = g.neighbors(y)[0] == v ? g.neighbors(y)[1] : g.neighbors(y)[0];
        out.answer = Answer::no;
        out.path = std::array<Vertex, 5>{a, x, v, y, b};
        return out;
    }
    out.answer = Answer::yes;
    return out;
}

bool TriangleVerdict::valid_for(const Graph& g) const {
    if (answer == Answer::yes) return !violation && triangle_condition(g).answer == Answer::yes;
    if (answer != Answer::no || !violation) return false;
    const auto& w = *violation;
    const auto& s = w.stable;
    if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        if (std::none_of(s.begin(), s.end(), [&](Vertex y) { return g.adjacent(x, y); })) return false;
    }
    if (!g.adjacent(w.u, w.v) || std::binary_search(s.begin(), s.end(), w.u) || std::binary_search(s.begin(), s.end(), w.v)) {
        return false;
    }
    return std::none_of(s.begin(), s.end(), [&](Vertex x) { return g.adjacent(x, w.u) && g.adjacent(x, w.v); });
}

TriangleVerdict triangle_condition(const Graph& g, std::uint64_t budget) {
    TriangleVerdict out;
    const auto stable = enumerate_maximal_stable_sets(g, budget);
    if (stable.exhausted) {
        out.budget = BudgetNote{"maximal stable set enumeration", budget};
        return out;
    }
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto adj = adjacency_bits(g);
    for (const auto& s : stable.sets) {
        const Bits in_s = bits_of(s, n);
        for (const auto& e : g.edges()) {
            if (in_s.test(static_cast<std::size_t>(e.u)) || in_s.test(static_cast<std::size_t>(e.v))) continue;
            if ((adj[static_cast<std::size_t>(e.u)] & adj[static_cast<std::size_t>(e.v)] & in_s).any()) continue;
            out.answer = Answer::no;
            out.violation = TriangleViolation{s, e.u, e.v};
            return out;
        }
    }
    out.answer = Answer::yes;
    return out;
}

bool is_strong_clique(const std::vector<VertexSet>& stable_sets, const VertexSet& clique) {
    return std::all_of(stable_sets.begin(), stable_sets.end(), [&](const VertexSet& s) {
        return std::any_of(clique.begin(), clique.end(), [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); });
    });
}

GeneralPartitionVerdict general_partition(const Graph& g, std::uint64_t budget) {
    GeneralPartitionVerdict out;
    const auto stable = enumerate_maximal_stable_sets(g, budget);
    const auto cliques = enumerate_maximal_cliques(g, budget);
    if (stable.exhausted || cliques.exhausted) {
        out.budget = BudgetNote{"maximal clique and stable set enumeration", budget};
        return out;
    }
    std::vector<const VertexSet*> strong;
    for (const auto& c : cliques.sets) {
        if (is_strong_clique(stable.sets, c)) strong.push_back(&c);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        auto it = std::find_if(strong.begin(), strong.end(), [&](const VertexSet* c) {
            return std::binary_search(c->begin(), c->end(), ed.u) && std::binary_search(c->begin(), c->end(), ed.v);
        });
        if (it == strong.end()) {
            out.answer = Answer::no;
            out.strong_clique.clear();
            out.failing_edge = e;
            return out;
        }
        out.strong_clique.push_back(**it);
    }
    out.answer = Answer::yes;
    return out;
}

bool GeneralPartitionVerdict::valid_for(const Graph& g) const {
    const auto stable = enumerate_maximal_stable_sets(g);
    if (stable.exhausted) return false;
    if (answer == Answer::yes) {
        if (static_cast<int>(strong_clique.size()) != g.edge_count() || failing_edge) return false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto& c = strong_clique[static_cast<std::size_t>(e)];
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (!g.adjacent(c[i], c[j])) return false;
            const auto& ed = g.edge(e);
            if (!std::binary_search(c.begin(), c.end(), ed.u) || !std::binary_search(c.begin(), c.end(), ed.v)) return false;
            if (!is_strong_clique(stable.sets, c)) return false;
        }
        return true;
    }
    if (answer != Answer::no || !failing_edge) return false;
    const auto& ed = g.edge(*failing_edge);
    for (const auto& c : enumerate_maximal_cliques(g).sets) {
        const bool contains = std::binary_search(c.begin(), c.end(), ed.u) && std::binary_search(c.begin(), c.end(), ed.v);
        if (contains && is_strong_clique(stable.sets, c)) return false;
    }
    return true;
}

Table1Report crosscheck_table1(const Graph& g, const Table1Budgets& budgets) {
    if (g.edge_count() == 0) throw InputError("graph has no edges");
    require_no_isolated(g);
    if (find_triangle(g)) throw InputError("graph has a triangle");

    Table1Report report;
    report.rows = {Table1Row{"general_partition"}, Table1Row{"strong"}, Table1Row{"equi"}, Table1Row{"p5_triangle"}};

    const auto classification = component_classification(g, kDefaultSearchBudget);
    report.rows[0].left = classification.incomplete ? Answer::unknown : answer_of(classification.all_good());
    const auto stars = star_system(g);
    report.rows[1].left = strong_check(stars, budgets.strong_ground).answer;
    report.rows[2].left = decide_equi_exact(stars, {budgets.exhaustive_ground, budgets.seed}).answer;
    report.rows[3].left = is_p5_constrained(g).answer;

    const Graph h = co_line(g).graph;
    report.rows[0].right = general_partition(h, budgets.enumeration).answer;
    const auto stable = stable_system(h, budgets.enumeration);
    if (const auto* s = std::get_if<SetSystem>(&stable)) {
        report.rows[1].right = strong_check(*s, budgets.strong_ground).answer;
        report.rows[2].right = decide_equi_exact(*s, {budgets.exhaustive_ground, budgets.seed}).answer;
    }
    report.rows[3].right = triangle_condition(h, budgets.enumeration).answer;

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        if (r.left == Answer::unknown || r.right == Answer::unknown) {
            report.partial = true;
            continue;
        }
        if (r.left != r.right) {
            report.violations.push_back("row " + std::to_string(i + 1) + " (" + r.name + "): left " + std::string(to_string(r.left)) +
                                        ", right " + std::string(to_string(r.right)));
        }
    }
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        const auto& up = report.rows[i];
        const auto& down = report.rows[i + 1];
        if (up.left == Answer::yes && down.left == Answer::no) {
            report.violations.push_back("left implication " + up.name + " => " + down.name);
        }
        if (up.right == Answer::yes && down.right == Answer::no) {
            report.violations.push_back("right implication " + up.name + " => " + down.name);
        }
    }
    return report;
}

}  // namespace equilab

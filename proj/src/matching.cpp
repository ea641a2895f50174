#include "equilab/matching.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <stdexcept>

namespace equilab {

namespace {

bool is_blocked(const std::vector<bool>& blocked, Vertex v) {
    return !blocked.empty() && blocked[static_cast<std::size_t>(v)];
}

VertexSet neighborhood_of(const Graph& g, const VertexSet& xs, const std::vector<bool>& blocked) {
    VertexSet out;
    for (Vertex x : xs) {
        for (Vertex y : g.neighbors(x)) {
            if (!is_blocked(blocked, y)) out.push_back(y);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // N(U) excludes U itself.
    VertexSet diff;
    std::set_difference(out.begin(), out.end(), xs.begin(), xs.end(), std::back_inserter(diff));
    return diff;
}

Matching from_mates(const Graph& g, const std::vector<Vertex>& mate) {
    Matching m;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex w = mate[static_cast<std::size_t>(v)];
        if (w > v) m.edges.push_back(*g.edge_id(v, w));
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

// Grows `mate` by one augmenting path from `root`, BFS over alternating
// paths with neighbours in ascending order. On failure returns the visited
// root-side vertices and their (fully matched) neighbourhood.
bool augment_from(const Graph& g, Vertex root, std::vector<Vertex>& mate, const std::vector<bool>& blocked,
                  VertexSet* reached_root_side, VertexSet* reached_other_side) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Vertex> parent(n, -1);  // other-side vertex -> root-side predecessor
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{root};
    std::vector<Vertex> other;
    seen[static_cast<std::size_t>(root)] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (is_blocked(blocked, y) || seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = true;
            parent[static_cast<std::size_t>(y)] = x;
            other.push_back(y);
            Vertex z = mate[static_cast<std::size_t>(y)];
            if (z < 0) {
                // Flip the path root ... x y.
                while (y >= 0) {
                    Vertex px = parent[static_cast<std::size_t>(y)];
                    Vertex next = mate[static_cast<std::size_t>(px)];
                    mate[static_cast<std::size_t>(y)] = px;
                    mate[static_cast<std::size_t>(px)] = y;
                    y = (px == root) ? -1 : next;
                }
                return true;
            }
            if (!seen[static_cast<std::size_t>(z)]) {
                seen[static_cast<std::size_t>(z)] = true;
                queue.push_back(z);
            }
        }
    }
    if (reached_root_side) {
        *reached_root_side = queue;
        std::sort(reached_root_side->begin(), reached_root_side->end());
    }
    if (reached_other_side) {
        *reached_other_side = other;
        std::sort(reached_other_side->begin(), reached_other_side->end());
    }
    return false;
}

}  // namespace

bool Matching::valid_for(const Graph& g) const {
    if (!std::is_sorted(edges.begin(), edges.end())) return false;
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        const auto& ed = g.edge(e);
        if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)]) return false;
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = true;
    }
    return true;
}

std::vector<bool> Matching::covered(const Graph& g) const {
    std::vector<bool> out(static_cast<std::size_t>(g.vertex_count()), false);
    for (EdgeId e : edges) {
        out[static_cast<std::size_t>(g.edge(e).u)] = true;
        out[static_cast<std::size_t>(g.edge(e).v)] = true;
    }
    return out;
}

VertexSet Matching::covered_vertices(const Graph& g) const {
    VertexSet out;
    auto mask = covered(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (mask[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool HallViolator::valid_for(const Graph& g, const std::vector<bool>& blocked) const {
    if (subset.empty() || !std::is_sorted(subset.begin(), subset.end())) return false;
    for (Vertex x : subset) {
        if (x < 0 || x >= g.vertex_count() || is_blocked(blocked, x)) return false;
    }
    if (neighborhood != neighborhood_of(g, subset, blocked)) return false;
    return static_cast<int>(neighborhood.size()) < static_cast<int>(subset.size()) + deficiency;
}

bool InternalMatching::valid_for(const Graph& g) const {
    if (!matching.valid_for(g)) return false;
    auto mask = matching.covered(g);
    VertexSet expect;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (mask[static_cast<std::size_t>(v)]) continue;
        if (g.degree(v) != 1) return false;
        expect.push_back(v);
    }
    return expect == uncovered;
}

Matching max_matching_bipartite(const Graph& g, const Bipartition& b) {
    std::vector<Vertex> mate(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex a : b.side_a) augment_from(g, a, mate, {}, nullptr, nullptr);
    return from_mates(g, mate);
}

std::variant<Matching, HallViolator> saturating_matching(const Graph& g, const Bipartition& b, const VertexSet& targets,
                                                         const std::vector<bool>& blocked) {
    if (!targets.empty()) {
        const bool side = b.in_a[static_cast<std::size_t>(targets.front())];
        for (Vertex t : targets) {
            if (b.in_a[static_cast<std::size_t>(t)] != side) throw InputError("saturation targets must lie on one side");
        }
    }
    std::vector<Vertex> mate(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex t : targets) {
        if (is_blocked(blocked, t)) throw InputError("saturation target is blocked");
        VertexSet xs, ns;
        if (!augment_from(g, t, mate, blocked, &xs, &ns)) {
            HallViolator h{std::move(xs), std::move(ns), 0, "saturate " + g.label(t)};
            if (!h.valid_for(g, blocked)) throw std::logic_error("saturating_matching produced an invalid Hall violator");
            return h;
        }
    }
    return from_mates(g, mate);
}

Matching dm_merge(const Graph& g, const Bipartition& b, const Matching& m_a, const Matching& m_b) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    auto cov_a = m_a.covered(g);
    auto cov_b = m_b.covered(g);
    std::vector<bool> required(n, false);
    for (std::size_t v = 0; v < n; ++v) required[v] = b.in_a[v] ? cov_a[v] : cov_b[v];

    EdgeSet uni;
    std::set_union(m_a.edges.begin(), m_a.edges.end(), m_b.edges.begin(), m_b.edges.end(), std::back_inserter(uni));
    // Components of M_A ∪ M_B are alternating paths and even cycles.
    std::vector<std::vector<EdgeId>> inc(n);
    for (EdgeId e : uni) {
        inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
        inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
    }
    std::vector<int> comp(n, -1);
    Matching out;
    for (EdgeId start : uni) {
        Vertex s = g.edge(start).u;
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Vertex> verts{s};
        comp[static_cast<std::size_t>(s)] = 1;
        EdgeSet edges;
        for (std::size_t head = 0; head < verts.size(); ++head) {
            for (EdgeId e : inc[static_cast<std::size_t>(verts[head])]) {
                edges.push_back(e);
                Vertex w = g.edge(e).u == verts[head] ? g.edge(e).v : g.edge(e).u;
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = 1;
                    verts.push_back(w);
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        bool placed = false;
        for (const Matching* side : {&m_a, &m_b}) {
            EdgeSet pick;
            std::set_intersection(edges.begin(), edges.end(), side->edges.begin(), side->edges.end(), std::back_inserter(pick));
            std::vector<bool> hit(n, false);
            for (EdgeId e : pick) hit[static_cast<std::size_t>(g.edge(e).u)] = hit[static_cast<std::size_t>(g.edge(e).v)] = true;
            if (std::all_of(verts.begin(), verts.end(), [&](Vertex v) {
                    return !required[static_cast<std::size_t>(v)] || hit[static_cast<std::size_t>(v)];
                })) {
                out.edges.insert(out.edges.end(), pick.begin(), pick.end());
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("dm_merge: no side covers an alternating component");
    }
    std::sort(out.edges.begin(), out.edges.end());
    if (!out.valid_for(g)) throw std::logic_error("dm_merge produced a non-matching");
    return out;
}

std::variant<Matching, HallViolator> matching_covering(const Graph& g, const Bipartition& b, const VertexSet& required,
                                                       const std::vector<bool>& blocked) {
    VertexSet in_a, in_b;
    for (Vertex v : required) (b.in_a[static_cast<std::size_t>(v)] ? in_a : in_b).push_back(v);
    auto ra = saturating_matching(g, b, in_a, blocked);
    if (auto* h = std::get_if<HallViolator>(&ra)) return std::move(*h);
    auto rb = saturating_matching(g, b, in_b, blocked);
    if (auto* h = std::get_if<HallViolator>(&rb)) return std::move(*h);
    return dm_merge(g, b, std::get<Matching>(ra), std::get<Matching>(rb));
}

// ---------------------------------------------------------------------------
// Extension

namespace {

struct ExhaustiveExtender {
    const Graph& g;
    const std::vector<bool>& required;
    std::vector<bool> covered;
    std::vector<EdgeId> chosen;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    bool exhausted = false;

    bool search() {
        if (++steps > budget) {
            exhausted = true;
            return false;
        }
        // Most constrained uncovered required vertex first.
        Vertex pick = -1;
        int options = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!required[static_cast<std::size_t>(v)] || covered[static_cast<std::size_t>(v)]) continue;
            int free = 0;
            for (Vertex w : g.neighbors(v)) free += !covered[static_cast<std::size_t>(w)];
            if (free == 0) return false;
            if (pick < 0 || free < options) {
                pick = v;
                options = free;
            }
        }
        if (pick < 0) return true;
        covered[static_cast<std::size_t>(pick)] = true;
        for (Vertex w : g.neighbors(pick)) {
            if (covered[static_cast<std::size_t>(w)]) continue;
            covered[static_cast<std::size_t>(w)] = true;
            chosen.push_back(*g.edge_id(pick, w));
            if (search()) return true;
            chosen.pop_back();
            covered[static_cast<std::size_t>(w)] = false;
            if (exhausted) break;
        }
        covered[static_cast<std::size_t>(pick)] = false;
        return false;
    }
};

}  // namespace

ExtensionResult extend_matching(const Graph& g, const std::optional<Bipartition>& b, const Matching& m, Coverage coverage,
                                std::uint64_t budget) {
    if (!m.valid_for(g)) throw InputError("extend_matching: input is not a matching of the graph");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    const auto blocked = m.covered(g);
    ExtensionResult out;

    auto finish = [&](EdgeSet extra) {
        out.extension.edges = m.edges;
        out.extension.edges.insert(out.extension.edges.end(), extra.begin(), extra.end());
        std::sort(out.extension.edges.begin(), out.extension.edges.end());
        if (!out.extension.valid_for(g)) throw std::logic_error("extension is not a matching");
        auto cov = out.extension.covered(g);
        for (std::size_t v = 0; v < n; ++v) {
            const bool needed = coverage == Coverage::perfect || g.degree(static_cast<Vertex>(v)) > 1;
            if (needed && !cov[v]) throw std::logic_error("extension misses a required vertex");
        }
        out.answer = Answer::yes;
    };

    if (b) {
        std::vector<bool> leaf_adjacent(n, false);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 1) leaf_adjacent[static_cast<std::size_t>(g.neighbors(v)[0])] = true;
        }
        // Internal mode: saturate the vertices that are neither leaves nor
        // next to a leaf, then hang leaf edges on whatever is left.
        VertexSet targets;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (blocked[static_cast<std::size_t>(v)]) continue;
            if (coverage == Coverage::perfect || (g.degree(v) > 1 && !leaf_adjacent[static_cast<std::size_t>(v)])) {
                targets.push_back(v);
            }
        }
        auto r = matching_covering(g, *b, targets, blocked);
        if (auto* h = std::get_if<HallViolator>(&r)) {
            out.answer = Answer::no;
            out.violator = std::move(*h);
            return out;
        }
        EdgeSet extra = std::get<Matching>(r).edges;
        if (coverage == Coverage::internal) {
            std::vector<bool> cov = blocked;
            for (EdgeId e : extra) cov[static_cast<std::size_t>(g.edge(e).u)] = cov[static_cast<std::size_t>(g.edge(e).v)] = true;
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (cov[static_cast<std::size_t>(v)] || g.degree(v) <= 1) continue;
                for (Vertex w : g.neighbors(v)) {
                    if (g.degree(w) == 1 && !cov[static_cast<std::size_t>(w)]) {
                        extra.push_back(*g.edge_id(v, w));
                        cov[static_cast<std::size_t>(v)] = cov[static_cast<std::size_t>(w)] = true;
                        break;
                    }
                }
            }
        }
        finish(std::move(extra));
        return out;
    }

    std::vector<bool> required(n, false);
    std::size_t open = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        required[static_cast<std::size_t>(v)] = coverage == Coverage::perfect || g.degree(v) > 1;
        ++open;
    }
    if (coverage == Coverage::perfect && open % 2 == 1) {
        out.answer = Answer::no;
        return out;
    }
    ExhaustiveExtender search{g, required, blocked, {}, budget};
    const bool found = search.search();
    out.steps = search.steps;
    if (found) {
        EdgeSet extra = search.chosen;
        std::sort(extra.begin(), extra.end());
        finish(std::move(extra));
    } else {
        out.answer = search.exhausted ? Answer::unknown : Answer::no;
    }
    return out;
}

InternalExtension extend_to_perfect_internal(const Graph& g, const std::optional<Bipartition>& b, const Matching& m,
                                             std::uint64_t budget) {
    auto r = extend_matching(g, b, m, Coverage::internal, budget);
    InternalExtension out;
    out.answer = r.answer;
    out.violator = std::move(r.violator);
    if (r.answer == Answer::yes) {
        InternalMatching im{std::move(r.extension), {}};
        auto cov = im.matching.covered(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!cov[static_cast<std::size_t>(v)]) im.uncovered.push_back(v);
        if (!im.valid_for(g)) throw std::logic_error("perfect internal matching invariant violated");
        out.result = std::move(im);
    }
    return out;
}

std::vector<Matching> k_matchings(const Graph& g, int k) {
    std::vector<Matching> out;
    const int m = g.edge_count();
    auto disjoint = [&](EdgeId a, EdgeId b) {
        const auto& x = g.edge(a);
        const auto& y = g.edge(b);
        return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
    };
    if (k == 1) {
        for (EdgeId e = 0; e < m; ++e) out.push_back({{e}});
    } else if (k == 2) {
        for (EdgeId e = 0; e < m; ++e)
            for (EdgeId f = e + 1; f < m; ++f)
                if (disjoint(e, f)) out.push_back({{e, f}});
    } else {
        throw InputError("only k in {1, 2} is supported");
    }
    return out;
}

namespace {

constexpr int kDenseSide = 10;

// has(R, C) for R ⊆ A, C ⊆ B with |R| = |C|: does G[R ∪ C] have a perfect
// matching. Filled lazily, so a query only pays for the states it reaches.
class PerfectMatchingTable {
public:
    PerfectMatchingTable(const Graph& g, const Bipartition& b)
        : a_(static_cast<int>(b.side_a.size())), pos_(static_cast<std::size_t>(g.vertex_count()), -1) {
        for (std::size_t i = 0; i < b.side_a.size(); ++i) pos_[static_cast<std::size_t>(b.side_a[i])] = static_cast<int>(i);
        for (std::size_t i = 0; i < b.side_b.size(); ++i) pos_[static_cast<std::size_t>(b.side_b[i])] = static_cast<int>(i);
        const int nb = static_cast<int>(b.side_b.size());
        nbr_.assign(static_cast<std::size_t>(a_), 0);
        for (int i = 0; i < a_; ++i) {
            for (Vertex w : g.neighbors(b.side_a[static_cast<std::size_t>(i)])) nbr_[static_cast<std::size_t>(i)] |= 1u << pos_[static_cast<std::size_t>(w)];
        }
        full_a_ = (1u << a_) - 1;
        full_b_ = (1u << nb) - 1;
        balanced_ = a_ == nb;
        if (balanced_) memo_.assign(std::size_t{1} << (a_ + nb), kUnknown);
    }

    // Does G - V(M) have a perfect matching; b.side_a / side_b decide which
    // endpoint of each edge is removed from which side.
    bool extends(const Graph& g, const Bipartition& b, std::span<const EdgeId> m) const {
        if (!balanced_) return false;
        std::uint32_t r = full_a_;
        std::uint32_t c = full_b_;
        for (EdgeId e : m) {
            Vertex x = g.edge(e).u;
            Vertex y = g.edge(e).v;
            if (!b.in_a[static_cast<std::size_t>(x)]) std::swap(x, y);
            r &= ~(1u << pos_[static_cast<std::size_t>(x)]);
            c &= ~(1u << pos_[static_cast<std::size_t>(y)]);
        }
        return has(r, c);
    }

private:
    static constexpr std::uint8_t kUnknown = 0, kNo = 1, kYes = 2;

    std::size_t index(std::uint32_t r, std::uint32_t c) const { return r | (std::size_t{c} << a_); }

    // Match the lowest vertex of R to each neighbour in C in turn.
    bool has(std::uint32_t r, std::uint32_t c) const {
        if (r == 0) return true;
        auto& slot = memo_[index(r, c)];
        if (slot != kUnknown) return slot == kYes;
        const std::uint32_t rest = r & (r - 1);
        std::uint32_t options = c & nbr_[static_cast<std::size_t>(std::countr_zero(r))];
        bool ok = false;
        while (options != 0 && !ok) {
            const std::uint32_t pick = options & (~options + 1);
            ok = has(rest, c & ~pick);
            options &= options - 1;
        }
        slot = ok ? kYes : kNo;
        return ok;
    }

    int a_;
    std::vector<int> pos_;
    std::vector<std::uint32_t> nbr_;
    mutable std::vector<std::uint8_t> memo_;
    std::uint32_t full_a_ = 0;
    std::uint32_t full_b_ = 0;
    bool balanced_ = false;
};

bool edges_disjoint(const Graph& g, EdgeId a, EdgeId b) {
    const auto& x = g.edge(a);
    const auto& y = g.edge(b);
    return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
}

// Same definitional check as the general route, with G - V(M) answered from
// a precomputed table; k-matchings are visited in lexicographic order.
ExtendabilityResult dense_perfect_extendability(const Graph& g, const Bipartition& b, int k) {
    ExtendabilityResult out;
    const PerfectMatchingTable table(g, b);
    const int m = g.edge_count();
    bool any = false;
    auto fail = [&](EdgeSet edges) {
        out.answer = Answer::no;
        out.failing = Matching{std::move(edges)};
        return out;
    };
    for (EdgeId e = 0; e < m; ++e) {
        if (k == 1) {
            any = true;
            const EdgeId one[] = {e};
            if (!table.extends(g, b, one)) return fail({e});
            continue;
        }
        for (EdgeId f = e + 1; f < m; ++f) {
            if (!edges_disjoint(g, e, f)) continue;
            any = true;
            const EdgeId two[] = {e, f};
            if (!table.extends(g, b, two)) return fail({e, f});
        }
    }
    if (!any) {
        out.answer = Answer::no;
        out.no_k_matching = true;
        return out;
    }
    out.answer = Answer::yes;
    return out;
}

ExtendabilityResult extendability(const Graph& g, int k, Coverage coverage, std::uint64_t budget) {
    if (k != 1 && k != 2) throw InputError("only k in {1, 2} is supported");
    if (!is_connected(g)) throw InputError("extendability is defined for connected graphs");
    ExtendabilityResult out;
    auto b = try_bipartition(g);
    if (coverage == Coverage::perfect && b && b->side_a.size() <= kDenseSide && b->side_b.size() <= kDenseSide) {
        return dense_perfect_extendability(g, *b, k);
    }
    auto ms = k_matchings(g, k);
    if (ms.empty()) {
        out.answer = Answer::no;
        out.no_k_matching = true;
        return out;
    }
    bool unknown = false;
    for (auto& m : ms) {
        auto r = extend_matching(g, b, m, coverage, budget);
        if (r.answer == Answer::no) {
            out.answer = Answer::no;
            out.failing = std::move(m);
            out.violator = std::move(r.violator);
            return out;
        }
        if (r.answer == Answer::unknown) unknown = true;
    }
    if (unknown) {
        out.answer = Answer::unknown;
        out.budget = BudgetNote{"matching extension search steps", budget};
    } else {
        out.answer = Answer::yes;
    }
    return out;
}

}  // namespace

ExtendabilityResult is_k_internally_extendable(const Graph& g, int k, std::uint64_t budget) {
    return extendability(g, k, Coverage::internal, budget);
}

ExtendabilityResult is_k_extendable(const Graph& g, int k, std::uint64_t budget) {
    if (g.vertex_count() < 2 * k) throw InputError("k-extendability needs at least 2k vertices");
    return extendability(g, k, Coverage::perfect, budget);
}

PlummerResult plummer_condition(const Graph& g, const Bipartition& b, int k) {
    if (k < 1) throw InputError("k must be positive");
    if (g.vertex_count() < 2 * k) throw InputError("Plummer condition needs at least 2k vertices");
    if (!is_connected(g)) throw InputError("Plummer condition is stated for connected graphs");
    PlummerResult out;
    out.balanced = b.side_a.size() == b.side_b.size();
    if (!out.balanced) return out;
    const int sa = static_cast<int>(b.side_a.size());
    if (sa > kPlummerMaxSide) throw InputError("Plummer brute force is limited to sides of size " + std::to_string(kPlummerMaxSide));
    std::vector<int> pos_b(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < b.side_b.size(); ++i) pos_b[static_cast<std::size_t>(b.side_b[i])] = static_cast<int>(i);
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(sa), 0);
    for (int i = 0; i < sa; ++i) {
        for (Vertex w : g.neighbors(b.side_a[static_cast<std::size_t>(i)])) nbr[static_cast<std::size_t>(i)] |= 1u << pos_b[static_cast<std::size_t>(w)];
    }
    const std::uint32_t limit = 1u << sa;
    for (std::uint32_t x = 1; x < limit; ++x) {
        const int size = std::popcount(x);
        if (size > sa - k) continue;
        std::uint32_t n_x = 0;
        for (int i = 0; i < sa; ++i)
            if (x >> i & 1u) n_x |= nbr[static_cast<std::size_t>(i)];
        if (std::popcount(n_x) < size + k) {
            VertexSet xs;
            for (int i = 0; i < sa; ++i)
                if (x >> i & 1u) xs.push_back(b.side_a[static_cast<std::size_t>(i)]);
            out.violating = std::move(xs);
            return out;
        }
    }
    out.holds = true;
    return out;
}

}  // namespace equilab

#include <doctest.h>

#include "equilab/catalog.hpp"
#include "equilab/gallery.hpp"
#include "equilab/transforms.hpp"
#include "oracles.hpp"

using namespace equilab;

namespace {

bool isomorphic(const Graph& g, const Graph& h) {
    const auto r = is_isomorphic(g, h);
    if (const auto* m = std::get_if<IsomorphismMapping>(&r)) {
        CHECK(verify_isomorphism(g, h, *m));
        return true;
    }
    REQUIRE(std::holds_alternative<NotIsomorphic>(r));
    return false;
}

const char* const kGallery[] = {"path(5)", "cycle(6)", "star(4)", "complete(4)", "complete_bipartite(4,3)", "kmn_plus(2,3)",
                                "petersen", "graph_H", "circulant(11,1,3)", "disjoint_union(cycle(4),star(2))"};

}  // namespace

TEST_CASE("line graph") {
    CHECK(isomorphic(line_graph(generate("star(3)")).graph, generate("complete(3)")));
    CHECK(isomorphic(line_graph(generate("path(4)")).graph, generate("path(3)")));
    const auto lk23 = line_graph(generate("complete_bipartite(2,3)")).graph;
    CHECK(lk23.vertex_count() == 6);
    for (Vertex v = 0; v < 6; ++v) CHECK(lk23.degree(v) == 3);

    for (const char* d : kGallery) {
        const Graph g = generate(d);
        const auto l = line_graph(g);
        int expected = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) expected += g.degree(v) * (g.degree(v) - 1) / 2;
        CHECK(l.graph.edge_count() == expected);
        for (Vertex a = 0; a < l.graph.vertex_count(); ++a) {
            CHECK(l.edge_of_vertex[a] == g.edge(a));
            for (Vertex b = a + 1; b < l.graph.vertex_count(); ++b) {
                const auto& x = g.edge(a);
                const auto& y = g.edge(b);
                const bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
                CHECK(l.graph.adjacent(a, b) == share);
            }
        }
    }
}

TEST_CASE("maximal cliques of the line graph are the maximal stars") {
    for (const auto& g : connected_graphs_up_to(6, GraphClass::triangle_free, 3)) {
        if (g.edge_count() > 12) continue;
        const auto cliques = enumerate_maximal_cliques(line_graph(g).graph).sets;
        const auto stars = oracle::maximal_stars(g);
        std::vector<std::vector<int>> c(cliques.begin(), cliques.end());
        CHECK(c == stars);
    }
}

TEST_CASE("complement") {
    const Graph c6 = generate("cycle(6)");
    CHECK(complement(complement(c6)) == c6);
    CHECK(complement(generate("complete(4)")).edge_count() == 0);
    CHECK(isomorphic(complement(generate("cycle(5)")), generate("cycle(5)")));
}

TEST_CASE("co-line graph") {
    const auto gstar = co_line(generate("kmn_plus(2,3)")).graph;
    CHECK(gstar.vertex_count() == 9);
    CHECK(co_line(parse_edge_list("a b")).graph.vertex_count() == 1);
    const auto p4 = co_line(generate("path(4)")).graph;
    CHECK(p4.vertex_count() == 3);
    CHECK(p4.edge_count() == 1);
    CHECK(p4.adjacent(0, 2));
    CHECK_THROWS_AS(co_line(Graph::with_default_labels(2, {})), InputError);

    // stable sets of co_line(g) are pairwise-meeting edge sets
    for (const auto& g : connected_graphs_up_to(5, GraphClass::triangle_free, 2)) {
        const auto h = co_line(g);
        for (const auto& s : oracle::maximal_stable_sets(h.graph)) {
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    const auto& x = g.edge(s[i]);
                    const auto& y = g.edge(s[j]);
                    CHECK((x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v));
                }
        }
        const auto sets = oracle::maximal_stable_sets(h.graph);
        std::vector<std::vector<int>> stable(sets.begin(), sets.end());
        CHECK(stable == oracle::maximal_stars(g));
    }
}

TEST_CASE("tensor product") {
    const Graph k2 = generate("complete(2)");
    const Graph kk = tensor_product(k2, k2);
    CHECK(kk.vertex_count() == 4);
    CHECK(kk.edge_count() == 2);
    const Graph k3k3 = tensor_product(generate("complete(3)"), generate("complete(3)"));
    CHECK(k3k3.vertex_count() == 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(k3k3.degree(v) == 4);
    CHECK(isomorphic(k3k3, co_line(generate("complete_bipartite(3,3)")).graph));

    const Graph p3 = generate("path(3)");
    const Graph c4 = generate("cycle(4)");
    CHECK(isomorphic(tensor_product(p3, c4), tensor_product(c4, p3)));
    CHECK(isomorphic(tensor_product(generate("star(2)"), generate("complete(3)")), tensor_product(generate("complete(3)"), generate("star(2)"))));
}

TEST_CASE("disjoint union") {
    const Graph k2 = generate("complete(2)");
    const Graph u = disjoint_union(k2, k2);
    CHECK(u.vertex_count() == 4);
    CHECK(u.edge_count() == 2);
    const Graph hh = disjoint_union(graph_h(), graph_h());
    CHECK(hh.vertex_count() == 18);
    CHECK(components(hh).count == 2);
    CHECK(components(disjoint_union(generate("cycle(5)"), Graph::with_default_labels(3, {}))).count == 4);
}

TEST_CASE("isomorphism") {
    CHECK(isomorphic(generate("cycle(5)"), complement(generate("cycle(5)"))));
    const Graph two_k3 = disjoint_union(generate("complete(3)"), generate("complete(3)"));
    CHECK_FALSE(isomorphic(generate("cycle(6)"), two_k3));
    CHECK(isomorphic(generate("petersen"), complement(line_graph(generate("complete(5)")).graph)));
    CHECK(std::holds_alternative<IsomorphismBudgetExhausted>(is_isomorphic(generate("petersen"), generate("petersen"), 1)));
}

#include <doctest.h>

#include <random>
#include <sstream>

#include "equilab/catalog.hpp"
#include "equilab/gallery.hpp"
#include "equilab/graph.hpp"
#include "equilab/transforms.hpp"
#include "oracles.hpp"

using namespace equilab;

namespace {

Graph relabeled(const Graph& g, std::mt19937_64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
    return Graph::with_default_labels(g.vertex_count(), edges);
}

std::vector<Graph> small_corpus() {
    auto out = connected_graphs_up_to(6, GraphClass::any, 1);
    for (const char* d : {"petersen", "graph_H", "kmn_plus(2,3)", "disjoint_union(cycle(4),path(3))", "circulant(9,1,3)"})
        out.push_back(generate(d));
    out.push_back(Graph::with_default_labels(3, {}));
    return out;
}

}  // namespace

TEST_CASE("parse_edge_list") {
    const Graph p3 = parse_edge_list("1 2\n2 3");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.label(0) == "1");

    const Graph k2 = parse_edge_list("a b\nb a\n# comment");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("x x"), ParseError);
    try {
        parse_edge_list("1 2\n3 3\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);

    const Graph iso = parse_edge_list("v z\n1 2\n");
    CHECK(iso.vertex_count() == 3);
    CHECK(iso.has_isolated_vertex());
}

TEST_CASE("graph invariants hold on the corpus") {
    for (const auto& g : small_corpus()) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(g.edge(e).u < g.edge(e).v);
            if (e > 0) CHECK(g.edge(e - 1) < g.edge(e));
        }
        int degree_sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            degree_sum += g.degree(v);
            for (Vertex w : g.neighbors(v)) CHECK(g.edge_id(v, w).has_value());
        }
        CHECK(degree_sum == 2 * g.edge_count());
        CAPTURE(to_edge_list(g));
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}

TEST_CASE("components") {
    const auto two = components(parse_edge_list("a b\nc d\n"));
    CHECK(two.count == 2);
    CHECK(two.vertices[0].size() == 2);
    CHECK(two.vertices[1].size() == 2);
    CHECK(components(generate("cycle(6)")).count == 1);
    CHECK(components(Graph::with_default_labels(3, {})).count == 3);

    std::mt19937_64 rng(7);
    for (const auto& g : small_corpus()) {
        const auto c = components(g);
        std::vector<std::size_t> sizes;
        for (const auto& vs : c.vertices) sizes.push_back(vs.size());
        const auto c2 = components(relabeled(g, rng));
        std::vector<std::size_t> sizes2;
        for (const auto& vs : c2.vertices) sizes2.push_back(vs.size());
        std::sort(sizes.begin(), sizes.end());
        std::sort(sizes2.begin(), sizes2.end());
        CHECK(sizes == sizes2);
        for (const auto& e : g.edges()) CHECK(c.component_of[e.u] == c.component_of[e.v]);
    }
}

TEST_CASE("bipartition") {
    const auto c4 = std::get<Bipartition>(bipartition(Graph::with_default_labels(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
    CHECK(c4.side_a == VertexSet{0, 2});
    CHECK(c4.side_b == VertexSet{1, 3});

    const auto c5 = std::get<OddCycle>(bipartition(generate("cycle(5)")));
    CHECK(c5.walk.size() == 5);
    CHECK(c5.valid_for(generate("cycle(5)")));

    const auto k23 = std::get<Bipartition>(bipartition(generate("complete_bipartite(2,3)")));
    CHECK(k23.side_a.size() == 2);
    CHECK(k23.side_b.size() == 3);

    for (const auto& g : small_corpus()) {
        const auto r = bipartition(g);
        CHECK(std::holds_alternative<Bipartition>(r) == oracle::bipartite(g));
        std::visit([&](const auto& w) { CHECK(w.valid_for(g)); }, r);
    }
}

TEST_CASE("maximal stable sets and cliques match brute force") {
    CHECK(enumerate_maximal_stable_sets(generate("complete(3)")).sets == std::vector<VertexSet>{{0}, {1}, {2}});
    const auto c5 = enumerate_maximal_stable_sets(generate("cycle(5)")).sets;
    CHECK(c5.size() == 5);
    for (const auto& s : c5) CHECK(s.size() == 2);

    CHECK(enumerate_maximal_cliques(generate("complete(3)")).sets == std::vector<VertexSet>{{0, 1, 2}});
    CHECK(enumerate_maximal_cliques(generate("cycle(4)")).sets.size() == 4);
    const auto lk13 = line_graph(generate("star(3)")).graph;
    CHECK(enumerate_maximal_cliques(lk13).sets == oracle::maximal_cliques(lk13));
    CHECK(enumerate_maximal_cliques(lk13).sets.size() == 1);

    const auto gstar = co_line(generate("kmn_plus(2,3)")).graph;
    const auto st = enumerate_maximal_stable_sets(gstar).sets;
    CHECK(st.size() == 5);
    for (const auto& s : st) CHECK(s.size() == 3);

    for (const auto& g : small_corpus()) {
        if (g.vertex_count() > 10) continue;
        const auto e = enumerate_maximal_stable_sets(g);
        CHECK(e.sets == oracle::maximal_stable_sets(g));
        CHECK(enumerate_maximal_cliques(g).sets == oracle::maximal_cliques(g));
        std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
        for (const auto& s : e.sets)
            for (Vertex v : s) seen[static_cast<std::size_t>(v)] = true;
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }

    const auto budgeted = enumerate_maximal_stable_sets(generate("petersen"), 3);
    CHECK(budgeted.exhausted);
}

TEST_CASE("gallery generators") {
    const Graph k43 = generate("complete_bipartite(4,3)");
    CHECK(k43.vertex_count() == 7);
    CHECK(k43.edge_count() == 12);
    const Graph k23p = generate("kmn_plus(2,3)");
    CHECK(k23p.vertex_count() == 8);
    CHECK(k23p.edge_count() == 9);
    const Graph pet = generate("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(oracle::triangle_free(pet));
    // girth 5: no 4-cycle either, i.e. no two vertices share two neighbours
    for (Vertex a = 0; a < 10; ++a)
        for (Vertex b = a + 1; b < 10; ++b) {
            int common = 0;
            for (Vertex w = 0; w < 10; ++w) common += pet.adjacent(a, w) && pet.adjacent(b, w);
            CHECK(common <= 1);
        }

    const Graph c11 = generate("circulant(11,1,3)");
    CHECK(c11.edge_count() == 22);
    CHECK(generate("circulant(6,3)").edge_count() == 3);
    CHECK_THROWS_AS(generate("circulant(6,4)"), InputError);
    CHECK_THROWS_AS(generate("circulant(7,2,2)"), InputError);
    CHECK_THROWS_AS(generate("cycle(2)"), InputError);
    CHECK_THROWS_AS(generate("nonsense(3)"), InputError);
    CHECK_THROWS_AS(generate("path(3"), InputError);
    CHECK(parse_descriptor("disjoint_union(graph_H,graph_H)").to_string() == "disjoint_union(graph_H,graph_H)");
}

TEST_CASE("triangle freeness") {
    CHECK(is_triangle_free(generate("cycle(5)")));
    const auto t = find_triangle(generate("complete(3)"));
    REQUIRE(t.has_value());
    CHECK(*t == std::array<Vertex, 3>{0, 1, 2});
    CHECK(is_triangle_free(generate("circulant(11,1,3)")));
    for (const auto& g : small_corpus()) CHECK(is_triangle_free(g) == oracle::triangle_free(g));
}

TEST_CASE("graph H transcription") {
    const Graph h = graph_h();
    CHECK(h.vertex_count() == 9);
    CHECK(h.edge_count() == 14);
    CHECK(is_triangle_free(h));
    CHECK(h.min_degree() >= 2);
    CHECK(is_connected(h));
}

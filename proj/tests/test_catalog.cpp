#include <doctest.h>

#include "equilab/catalog.hpp"
#include "equilab/transforms.hpp"

using namespace equilab;

namespace {

std::vector<std::size_t> counts(int max_n, GraphClass cls) {
    std::vector<std::size_t> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(connected_graphs(n, cls).size());
    return out;
}

using Counts = std::vector<std::size_t>;

}  // namespace

// Reference counts of unlabelled connected graphs (OEIS A001349, A005142,
// A024607, A000055).
TEST_CASE("catalog sizes match the published counts") {
    CHECK(counts(7, GraphClass::any) == Counts{1, 1, 2, 6, 21, 112, 853});
    CHECK(counts(8, GraphClass::bipartite) == Counts{1, 1, 1, 3, 5, 17, 44, 182});
    CHECK(counts(8, GraphClass::triangle_free) == Counts{1, 1, 1, 3, 6, 19, 59, 267});
    CHECK(counts(10, GraphClass::forest) == Counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106});
}

TEST_CASE("catalog members are connected, in class and pairwise non-isomorphic") {
    const auto graphs = connected_graphs(6, GraphClass::any);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(is_connected(graphs[i]));
        for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK(std::holds_alternative<NotIsomorphic>(is_isomorphic(graphs[i], graphs[j])));
    }
    for (const auto& g : connected_graphs_up_to(7, GraphClass::triangle_free, 1)) CHECK(is_triangle_free(g));
}

TEST_CASE("forests without isolated vertices") {
    // Multisets of trees with at least one edge: unbounded knapsack over
    // every tree class.
    const int max_n = 10;
    const Counts trees{0, 0, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    std::vector<std::size_t> expected(max_n + 1, 0);
    expected[0] = 1;
    for (int k = 2; k <= max_n; ++k)
        for (std::size_t t = 0; t < trees[k]; ++t)
            for (int n = k; n <= max_n; ++n) expected[n] += expected[n - k];

    std::vector<std::size_t> got(max_n + 1, 0);
    const auto forests = forests_without_isolated(max_n);
    for (const auto& f : forests) {
        CHECK(is_forest(f));
        CHECK_FALSE(f.has_isolated_vertex());
        ++got[f.vertex_count()];
    }
    for (int n = 2; n <= max_n; ++n) CHECK(got[n] == expected[n]);
    CHECK(got[6] == 10);
}

TEST_CASE("random triangle-free samples") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const Graph g = random_triangle_free(9, 12, rng);
        CHECK(is_connected(g));
        CHECK(is_triangle_free(g));
        CHECK(g.edge_count() <= 12);
    }
}

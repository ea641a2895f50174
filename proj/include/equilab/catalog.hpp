#pragma once

#include <random>
#include <vector>

#include "equilab/graph.hpp"

namespace equilab {

enum class GraphClass { any, triangle_free, bipartite, forest };

bool belongs_to(const Graph& g, GraphClass cls);

/// Connected graphs on exactly n vertices in the class, one per isomorphism
/// class, labelled 0..n-1. Built by adding a vertex to every smaller member
/// (every connected graph has a vertex whose removal keeps it connected).
std::vector<Graph> connected_graphs(int n, GraphClass cls);
/// All of the above for min_n <= n <= max_n, by increasing n.
std::vector<Graph> connected_graphs_up_to(int max_n, GraphClass cls, int min_n = 1);

/// Forests without isolated vertices on 2..max_n vertices, one per
/// isomorphism class (multisets of trees with at least one edge).
std::vector<Graph> forests_without_isolated(int max_n);

/// Random connected triangle-free graph: random spanning tree, then random
/// extra edges that close no triangle, at most max_edges edges in total.
Graph random_triangle_free(int n, int max_edges, std::mt19937_64& rng);

}  // namespace equilab

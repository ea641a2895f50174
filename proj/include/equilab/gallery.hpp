#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equilab/graph.hpp"

namespace equilab {

/// A named graph family with integer parameters, e.g. "kmn_plus(2,3)".
///
/// Families and labelings:
///   path(n), cycle(n), complete(n)   vertices 1..n
///   star(n)                          K_{1,n}: centre 0, leaves 1..n
///   complete_bipartite(m,n)          sides a1..am and b1..bn
///   kmn_plus(m,n)                    K_{m,n} plus a private leaf li on each bi
///   petersen                         outer cycle 1..5, inner pentagram 6..10, spokes i-(i+5)
///   circulant(n,s1,s2,...)           vertices 0..n-1, i ~ i±s (mod n)
///   graph_H                          the 9-vertex equistarable, not strongly equistarable graph
///   disjoint_union(d1,d2)            see disjoint_union()
struct GalleryDescriptor {
    std::string family;
    std::vector<int> params;
    std::vector<GalleryDescriptor> parts;

    std::string to_string() const;
};

/// Throws InputError on syntax errors, unknown families or invalid parameters.
GalleryDescriptor parse_descriptor(std::string_view text);
Graph generate(const GalleryDescriptor& descriptor);
inline Graph generate(std::string_view descriptor) { return generate(parse_descriptor(descriptor)); }

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph kmn_plus(int m, int n);
Graph petersen_graph();
Graph circulant_graph(int n, std::vector<int> offsets);
/// Triangle-free, minimum degree 2, 9 vertices, 14 edges. Removing the two
/// matching edges 1-2 and 3-4 leaves a bipartite graph with sides {1..5}
/// and {6..9}; vertex 5 is adjacent to all of 6..9.
Graph graph_h();

}  // namespace equilab

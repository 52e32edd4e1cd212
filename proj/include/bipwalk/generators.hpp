#pragma once

#include "bipwalk/graph.hpp"
#include "bipwalk/rng.hpp"

namespace bipwalk {

// Cycle 0-1-...-(n-1)-0. n must be even and >= 4.
Graph gen_even_cycle(int n);

// rows x cols grid, vertex (i, j) = i*cols + j. Both sides >= 1.
Graph gen_grid(int rows, int cols);

// m triangles glued at cut vertices: triangle i is {2i, 2i+1, 2i+2}.
// 2m+1 vertices, 3m edges; exactly m edge deletions are needed to make it
// bipartite, so the family stays far from bipartite at any fixed eps < 1/2.
Graph gen_triangle_chain(int m);

// Families of short cycles meeting in one or two high-degree vertices.
//
// hubs == 1: `paths` petal cycles of length 2*path_len + 1 sharing vertex 0.
// hubs == 2: vertices 0 and 1 joined by `paths` internally disjoint paths
// whose lengths alternate between path_len and path_len + 1, so each adjacent
// pair of paths closes an odd cycle. Since parallel edges are not
// representable, at most one path of length 1 is emitted; further length-1
// paths are lengthened by 2, which keeps their parity and the odd cycles.
Graph gen_parallel_cycles(int hubs, int paths, int path_len);

// One new vertex per seed edge, turning every seed edge (u, v) into the
// triangle {u, v, w_uv}. Seed edges are kept. With a high-girth, high-degree
// seed the output is far from bipartite yet short walks rarely close any of
// the planted triangles.
Graph gen_expander_triangles(const Graph& seed);

// Random d-regular graph from the pairing model; self-loops, parallel edges
// and cycles shorter than min_girth are removed by randomized edge swaps.
// n*d must be even, d >= 2, min_girth <= 5.
Graph random_regular_graph(int n, int d, int min_girth, Rng& rng);

// Degree reduction: every vertex of degree d > 3 becomes a path of d
// attachment vertices, with the path edges subdivided once so the gadget
// stays in one color class. Preserves bipartiteness in both directions and
// can only lower the distance to bipartiteness relative to vertex count.
// Inputs that already have maximum degree <= 3 are returned unchanged.
Graph split_to_degree3(const Graph& g);

}  // namespace bipwalk

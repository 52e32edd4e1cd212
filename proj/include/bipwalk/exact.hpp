#pragma once

#include <optional>
#include <vector>

#include "bipwalk/graph.hpp"

namespace bipwalk {

struct BipartiteCheck {
    bool bipartite;
    std::vector<int> coloring;       // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;      // simple odd cycle witness otherwise
};

// BFS 2-coloring; on failure returns a simple odd cycle extracted from the
// BFS tree plus the offending same-level edge.
BipartiteCheck is_bipartite(const Graph& g);

// Joins the two BFS-tree paths root->a and root->b at their last common
// vertex. a and b must sit at the same tree depth, so appending the crossing
// edge (a, b) closes a simple odd cycle.
std::vector<int> splice_cycle(const std::vector<int>& parent, int a, int b);

// Minimum number of edge deletions that make g bipartite, by enumerating all
// bipartitions with vertex 0 pinned to one side. Throws CapacityError for
// more than max_enum_vertices vertices (default 26); use
// packing_lower_bound for larger instances.
long long distance_to_bipartite_exact(const Graph& g, int max_enum_vertices = 26);

// Shortest simple odd cycle, or nothing if g is bipartite.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);

// Greedily removes a shortest odd cycle until the graph is bipartite or the
// shortest odd cycle exceeds length_cap (0 = uncapped). The count of removed
// cycles is a certified lower bound on the distance to bipartiteness, since
// the removed cycles are edge-disjoint and each needs a deletion of its own.
long long packing_lower_bound(const Graph& g, int length_cap = 0);

}  // namespace bipwalk

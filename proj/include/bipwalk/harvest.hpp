#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bipwalk/decomposition.hpp"
#include "bipwalk/graph.hpp"
#include "bipwalk/rng.hpp"

namespace bipwalk {

// Pairwise edge-disjoint simple odd cycles of a base graph. Each cycle is a
// closed vertex sequence: consecutive entries and the wrap-around pair are
// edges.
struct CycleSet {
    std::vector<std::vector<int>> cycles;

    std::size_t size() const { return cycles.size(); }
    bool empty() const { return cycles.empty(); }
    // length of the longest cycle, 0 when empty
    int max_length() const;
};

// Throws ValidationError when a cycle is even, non-simple, uses an edge
// missing from g, or shares an edge with another cycle.
void validate_cycle_set(const Graph& g, const CycleSet& cs);

struct HarvestOptions {
    // stop once this many cycles are collected; -1 derives
    // ceil(epsilon*n / (2*achieved_k)) as the collection grows
    long long target = -1;
    int max_rounds = 1000;
    DecomposeOptions decompose;
};

struct HarvestResult {
    CycleSet cycles;
    int achieved_k = 0;           // longest extracted cycle
    long long target = 0;         // count the run was aiming for
    bool reached_target = false;  // false means the residual ran out of odd components first
    int rounds_used = 0;
};

// Repeatedly decomposes the residual graph at delta = epsilon/2 and pulls one
// short odd cycle out of each non-bipartite component: BFS over the whole
// residual from the component's smallest vertex, pick a component edge whose
// endpoints share a BFS level, splice the two tree paths at their last common
// vertex. Extracted edges leave the residual immediately. A component whose
// candidate cycle exceeds 2*(verified weak diameter)+1 is deferred to the
// next round, where a fresh decomposition re-verifies it; the first
// non-bipartite component of a round always yields a valid cycle, so every
// round makes progress. Stops at the target count or when no component is
// non-bipartite, whichever comes first.
HarvestResult harvest_odd_cycles(const Graph& g, double epsilon, Rng& rng, const HarvestOptions& opt = {});

// Cycle-deletion rule shared by the base-graph and contracted-image flavors.
// cycle_touch[i] lists (vertex, degree contribution) pairs of cycle i; with
// alpha = cycle_count/vertex_count fixed up front, any vertex that is still
// touched but has current contribution total <= (alpha/12) * reference_degree
// loses all its cycles. Violators are processed in ascending id order until
// none remain (each vertex can trigger at most once: afterwards it is
// untouched). Comparisons are exact integer arithmetic. Returns the alive
// mask; at least half the cycles survive whenever the reference degrees sum
// to at most 6*vertex_count.
std::vector<char> degree_prune_mask(int vertex_count,
                                    const std::vector<std::vector<std::pair<int, int>>>& cycle_touch,
                                    const std::vector<long long>& reference_degree);

// Base-graph flavor: reference degrees are degrees in g, every visited vertex
// of a simple cycle contributes 2.
CycleSet degree_prune(const Graph& g, const CycleSet& cs);

}  // namespace bipwalk

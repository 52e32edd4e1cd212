#pragma once

#include <string>
#include <vector>

#include "bipwalk/graph.hpp"
#include "bipwalk/harvest.hpp"

namespace bipwalk::testing {

struct CycleFixture {
    std::string name;
    Graph graph;      // base graph: the union of the cycle edges unless noted
    CycleSet cycles;  // pairwise edge-disjoint odd cycles of graph
};

// 23 named instances with cycle lengths up to 7: disjoint rings, glued
// triangle chains, shared-hub petal families, two-hub theta pairs, a
// star-hub graph whose extra edges trigger the degree-retention rule, and
// mixed bags. Built once, in a stable order.
const std::vector<CycleFixture>& cycle_fixtures();

// K13 split into six edge-disjoint Hamiltonian 13-cycles. Every image vertex
// of the identity contraction sees 12 distinct neighbors, so the level
// assignment has no vertex to pick.
const CycleFixture& dense_k13_fixture();

Graph k4();

}  // namespace bipwalk::testing

#include <doctest.h>

#include <set>
#include <vector>

#include "bipwalk/errors.hpp"
#include "bipwalk/exact.hpp"
#include "bipwalk/generators.hpp"
#include "bipwalk/harvest.hpp"
#include "fixtures.hpp"

using namespace bipwalk;

namespace {

Graph ring(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("is_bipartite produces a valid coloring on bipartite inputs") {
    for (const Graph& g : {gen_grid(6, 5), gen_even_cycle(14), gen_grid(1, 9)}) {
        BipartiteCheck res = is_bipartite(g);
        REQUIRE(res.bipartite);
        REQUIRE(static_cast<int>(res.coloring.size()) == g.vertex_count());
        for (auto [u, v] : g.edges()) CHECK(res.coloring[u] != res.coloring[v]);
    }
}

TEST_CASE("is_bipartite returns a genuine odd-cycle witness otherwise") {
    for (const Graph& g : {gen_triangle_chain(6), ring(9), bipwalk::testing::k4(), gen_parallel_cycles(2, 5, 2)}) {
        BipartiteCheck res = is_bipartite(g);
        REQUIRE(!res.bipartite);
        const auto& c = res.odd_cycle;
        REQUIRE(c.size() >= 3);
        CHECK(c.size() % 2 == 1);
        std::set<int> distinct(c.begin(), c.end());
        CHECK(distinct.size() == c.size());
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
    }
}

TEST_CASE("splice_cycle joins two tree paths at the last common vertex") {
    // BFS tree of a 9-ring rooted at 0: parents along both arcs
    std::vector<int> parent{-1, 0, 1, 2, 3, 6, 7, 8, 0};
    std::vector<int> cycle = splice_cycle(parent, 4, 5);
    CHECK(cycle.size() == 9);
    std::set<int> distinct(cycle.begin(), cycle.end());
    CHECK(distinct.size() == 9);

    // shared prefix: paths 0-1-2-3 and 0-1-2-7 meet at 2
    std::vector<int> parent2{-1, 0, 1, 2, -1, -1, -1, 2};
    std::vector<int> tri = splice_cycle(parent2, 3, 7);
    CHECK(tri == std::vector<int>{2, 3, 7});
}

TEST_CASE("exact distance matches hand-computed instances") {
    CHECK(distance_to_bipartite_exact(ring(5)) == 1);
    CHECK(distance_to_bipartite_exact(bipwalk::testing::k4()) == 2);
    CHECK(distance_to_bipartite_exact(gen_triangle_chain(4)) == 4);
    CHECK(distance_to_bipartite_exact(gen_grid(4, 5)) == 0);
    CHECK(distance_to_bipartite_exact(gen_even_cycle(8)) == 0);
    CHECK(distance_to_bipartite_exact(ring(7)) == 1);
    CHECK(distance_to_bipartite_exact(gen_parallel_cycles(1, 4, 1)) == 4);
}

TEST_CASE("exact distance refuses oversized inputs") {
    CHECK_THROWS_AS(distance_to_bipartite_exact(gen_grid(9, 3)), CapacityError);
    CHECK(distance_to_bipartite_exact(gen_grid(9, 3), 27) == 0);  // the cap is adjustable
}

TEST_CASE("shortest odd cycle finds the girth witness or nothing") {
    auto tri = shortest_odd_cycle(bipwalk::testing::k4());
    REQUIRE(tri.has_value());
    CHECK(tri->size() == 3);

    auto five = shortest_odd_cycle(ring(5));
    REQUIRE(five.has_value());
    CHECK(five->size() == 5);

    auto seven = shortest_odd_cycle(ring(7));
    REQUIRE(seven.has_value());
    CHECK(seven->size() == 7);

    CHECK(!shortest_odd_cycle(gen_grid(5, 5)).has_value());
}

TEST_CASE("packing bound is sandwiched by the exact distance") {
    for (const auto& fx : bipwalk::testing::cycle_fixtures()) {
        if (fx.graph.vertex_count() > 24) continue;
        const long long packing = packing_lower_bound(fx.graph);
        const long long exact = distance_to_bipartite_exact(fx.graph);
        CHECK(packing >= 1);
        CHECK(packing <= exact);
    }
    CHECK(packing_lower_bound(gen_triangle_chain(30)) == 30);
    CHECK(packing_lower_bound(gen_grid(6, 6)) == 0);
}

TEST_CASE("packing length cap stops early") {
    CHECK(packing_lower_bound(ring(5), 3) == 0);
    CHECK(packing_lower_bound(ring(5), 5) == 1);
    CHECK(packing_lower_bound(gen_triangle_chain(8), 3) == 8);
}

TEST_CASE("bipartiteness witnesses satisfy the cycle-set contract") {
    Graph g = gen_triangle_chain(10);
    BipartiteCheck res = is_bipartite(g);
    REQUIRE(!res.bipartite);
    CycleSet cs;
    cs.cycles.push_back(res.odd_cycle);
    validate_cycle_set(g, cs);  // throws on any malformation
}

#include "fixtures.hpp"

#include <numeric>
#include <utility>

namespace bipwalk::testing {
namespace {

CycleFixture from_cycles(std::string name, int n, std::vector<std::vector<int>> cycles) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    CycleFixture fx;
    fx.name = std::move(name);
    fx.graph = Graph::from_edges(n, std::move(edges));
    fx.cycles.cycles = std::move(cycles);
    return fx;
}

std::vector<std::vector<int>> disjoint_rings(int m, int len, int offset = 0) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < m; ++i) {
        std::vector<int> c(len);
        std::iota(c.begin(), c.end(), offset + i * len);
        out.push_back(std::move(c));
    }
    return out;
}

CycleFixture rings(std::string name, int m, int len) {
    return from_cycles(std::move(name), m * len, disjoint_rings(m, len));
}

CycleFixture chain(std::string name, int m) {
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < m; ++i) cycles.push_back({2 * i, 2 * i + 1, 2 * i + 2});
    return from_cycles(std::move(name), 2 * m + 1, std::move(cycles));
}

CycleFixture petals(std::string name, int paths, int path_len) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int j = 0; j < paths; ++j) {
        std::vector<int> c{0};
        for (int s = 0; s < 2 * path_len; ++s) c.push_back(next++);
        cycles.push_back(std::move(c));
    }
    return from_cycles(std::move(name), next, std::move(cycles));
}

CycleFixture theta_pairs(std::string name, int pairs) {
    // hubs 0 and 1; pair j closes the 5-cycle 0-x-1-b-a-0
    std::vector<std::vector<int>> cycles;
    int next = 2;
    for (int j = 0; j < pairs; ++j) {
        const int x = next++, a = next++, b = next++;
        cycles.push_back({0, x, 1, b, a});
    }
    return from_cycles(std::move(name), next, std::move(cycles));
}

CycleFixture mixed_petals() {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int j = 0; j < 3; ++j) {
        cycles.push_back({0, next, next + 1});
        next += 2;
    }
    for (int j = 0; j < 3; ++j) {
        cycles.push_back({0, next, next + 1, next + 2, next + 3});
        next += 4;
    }
    return from_cycles("mixed-petals", next, std::move(cycles));
}

CycleFixture mixed_bag() {
    std::vector<std::vector<int>> cycles = disjoint_rings(5, 3);
    for (auto& c : disjoint_rings(3, 5, 15)) cycles.push_back(std::move(c));
    for (auto& c : disjoint_rings(2, 7, 30)) cycles.push_back(std::move(c));
    return from_cycles("mixed-bag", 44, std::move(cycles));
}

// 24 free triangles plus the triangle {72, 73, 74}, with vertex 74 joined to
// every other vertex. With |C| = 25 and n = 75 the hub meets
// 12 * 2 * 75 = 1800 <= 25 * 74, so exactly its triangle gets pruned.
CycleFixture star_hub() {
    const int h = 74, n = 75;
    std::vector<std::vector<int>> cycles = disjoint_rings(24, 3);
    cycles.push_back({72, 73, h});
    std::vector<std::pair<int, int>> edges;
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    for (int v = 0; v < h; ++v) edges.emplace_back(v, h);
    CycleFixture fx;
    fx.name = "star-hub";
    fx.graph = Graph::from_edges(n, std::move(edges));
    fx.cycles.cycles = std::move(cycles);
    return fx;
}

}  // namespace

const std::vector<CycleFixture>& cycle_fixtures() {
    static const std::vector<CycleFixture> all = [] {
        std::vector<CycleFixture> out;
        out.push_back(rings("triangles-1", 1, 3));
        out.push_back(rings("triangles-5", 5, 3));
        out.push_back(rings("triangles-40", 40, 3));
        out.push_back(rings("triangles-200", 200, 3));
        out.push_back(chain("chain-1", 1));
        out.push_back(chain("chain-4", 4));
        out.push_back(chain("chain-25", 25));
        out.push_back(chain("chain-100", 100));
        out.push_back(petals("petals3-3", 3, 1));
        out.push_back(petals("petals3-12", 12, 1));
        out.push_back(petals("petals3-50", 50, 1));
        out.push_back(petals("petals5-6", 6, 2));
        out.push_back(petals("petals5-24", 24, 2));
        out.push_back(rings("c5-1", 1, 5));
        out.push_back(rings("c5-4", 4, 5));
        out.push_back(rings("c5-30", 30, 5));
        out.push_back(rings("c7-1", 1, 7));
        out.push_back(rings("c7-10", 10, 7));
        out.push_back(theta_pairs("theta-2", 2));
        out.push_back(theta_pairs("theta-8", 8));
        out.push_back(star_hub());
        out.push_back(mixed_bag());
        out.push_back(mixed_petals());
        return out;
    }();
    return all;
}

const CycleFixture& dense_k13_fixture() {
    static const CycleFixture fx = [] {
        const int hub = 12;
        std::vector<std::vector<int>> cycles;
        for (int i = 0; i < 6; ++i) {
            std::vector<int> c{hub};
            int step = 0;
            int at = i;
            c.push_back(at);
            for (int j = 1; j < 12; ++j) {
                ++step;
                at = (j % 2 ? at + step : at - step + 24) % 12;
                c.push_back(at);
            }
            cycles.push_back(std::move(c));
        }
        return from_cycles("dense-k13", 13, std::move(cycles));
    }();
    return fx;
}

Graph k4() {
    return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace bipwalk::testing

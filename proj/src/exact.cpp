#include "bipwalk/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>

#include "bipwalk/errors.hpp"

namespace bipwalk {

std::vector<int> splice_cycle(const std::vector<int>& parent, int a, int b) {
    std::vector<int> pa{a}, pb{b};
    int x = a, y = b;
    while (x != y) {
        x = parent[x];
        y = parent[y];
        pa.push_back(x);
        pb.push_back(y);
    }
    // pa: a ... v', pb: b ... v'
    std::vector<int> cycle(pa.rbegin(), pa.rend());  // v' ... a
    for (std::size_t i = 0; i + 1 < pb.size(); ++i) cycle.push_back(pb[i]);  // b ... (child of v')
    return cycle;  // closes with the tree edge (child of v', v'); length is odd
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1), dist(n, -1), parent(n, -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        dist[s] = 0;
        parent[s] = s;
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return {false, {}, splice_cycle(parent, u, v)};
                }
            }
        }
    }
    return {true, std::move(color), {}};
}

long long distance_to_bipartite_exact(const Graph& g, int max_enum_vertices) {
    const int n = g.vertex_count();
    if (n > max_enum_vertices)
        throw CapacityError("exact distance enumerates 2^(n-1) bipartitions; " + std::to_string(n) +
                            " vertices exceed the limit of " + std::to_string(max_enum_vertices) +
                            " (use packing_lower_bound instead)");
    if (n <= 1) return 0;
    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) nbr_mask[u] |= std::uint32_t{1} << v;
    const long long m = g.edge_count();
    long long best = m;
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    for (std::uint64_t raw = 0; raw < masks; ++raw) {
        std::uint32_t side = static_cast<std::uint32_t>(raw) << 1;  // vertex 0 stays on side 0
        long long cut = 0;
        std::uint32_t rest = side;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cut += std::popcount(nbr_mask[v] & ~side);
        }
        best = std::min(best, m - cut);
        if (best == 0) break;
    }
    return best;
}

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(n), parent(n);
    std::vector<int> best_cycle;
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = s;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (!best_cycle.empty() && 2 * dist[u] + 1 >= static_cast<int>(best_cycle.size())) break;
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (dist[v] == dist[u]) {
                    std::vector<int> cycle = splice_cycle(parent, u, v);
                    if (best_cycle.empty() || cycle.size() < best_cycle.size()) best_cycle = std::move(cycle);
                }
            }
        }
        if (static_cast<int>(best_cycle.size()) == 3) break;
    }
    if (best_cycle.empty()) return std::nullopt;
    return best_cycle;
}

long long packing_lower_bound(const Graph& g, int length_cap) {
    std::vector<std::pair<int, int>> residual = g.edges();
    const int n = g.vertex_count();
    long long count = 0;
    while (true) {
        Graph h = Graph::from_edges(n, residual);
        auto cycle = shortest_odd_cycle(h);
        if (!cycle) break;
        if (length_cap > 0 && static_cast<int>(cycle->size()) > length_cap) break;
        std::vector<std::pair<int, int>> drop;
        const auto& c = *cycle;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int u = c[i], v = c[(i + 1) % c.size()];
            drop.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(drop.begin(), drop.end());
        std::vector<std::pair<int, int>> next;
        next.reserve(residual.size() - drop.size());
        for (auto e : residual)
            if (!std::binary_search(drop.begin(), drop.end(), e)) next.push_back(e);
        residual = std::move(next);
        ++count;
    }
    return count;
}

}  // namespace bipwalk

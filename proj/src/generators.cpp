#include "bipwalk/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "bipwalk/errors.hpp"

namespace bipwalk {

namespace {

long long edge_key(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n + v;
}

}  // namespace

Graph gen_even_cycle(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("even cycle needs an even n >= 4");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(2LL * rows * cols));
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph gen_triangle_chain(int m) {
    if (m < 1) throw std::invalid_argument("triangle chain needs m >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(3LL * m));
    for (int i = 0; i < m; ++i) {
        int a = 2 * i, b = 2 * i + 1, c = 2 * i + 2;
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        edges.emplace_back(a, c);
    }
    return Graph::from_edges(2 * m + 1, std::move(edges));
}

Graph gen_parallel_cycles(int hubs, int paths, int path_len) {
    if (hubs != 1 && hubs != 2) throw std::invalid_argument("hubs must be 1 or 2");
    if (path_len < 1) throw std::invalid_argument("path_len must be >= 1");
    std::vector<std::pair<int, int>> edges;
    if (hubs == 1) {
        if (paths < 1) throw std::invalid_argument("need at least one petal");
        int next = 1;
        for (int p = 0; p < paths; ++p) {
            int len = 2 * path_len + 1;  // odd petal through the hub
            int prev = 0;
            for (int s = 0; s < len - 1; ++s) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, 0);
        }
        return Graph::from_edges(next, std::move(edges));
    }
    if (paths < 2) throw std::invalid_argument("two hubs need at least two paths");
    int next = 2;
    bool have_direct = false;
    for (int p = 0; p < paths; ++p) {
        int len = path_len + (p % 2);
        if (len == 1) {
            if (have_direct) len = 3;  // keep parity, stay simple
            else have_direct = true;
        }
        if (len == 1) {
            edges.emplace_back(0, 1);
            continue;
        }
        int prev = 0;
        for (int s = 0; s < len - 1; ++s) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::from_edges(next, std::move(edges));
}

Graph gen_expander_triangles(const Graph& seed) {
    const int n = seed.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(3 * seed.edge_count()));
    int next = n;
    for (auto [u, v] : seed.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u, next);
        edges.emplace_back(v, next);
        ++next;
    }
    return Graph::from_edges(next, std::move(edges));
}

Graph random_regular_graph(int n, int d, int min_girth, Rng& rng) {
    if (d < 2 || n <= d) throw std::invalid_argument("need 2 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0) throw std::invalid_argument("n*d must be even");
    if (min_girth > 5) throw std::invalid_argument("girth repair supports min_girth <= 5");

    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rand_below(rng, i)]);

    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i < stubs.size(); i += 2) edge_list.emplace_back(stubs[i], stubs[i + 1]);

    std::unordered_set<long long> present;
    present.reserve(edge_list.size() * 2);
    auto insert_edge = [&](int u, int v) { present.insert(edge_key(n, u, v)); };
    auto erase_edge = [&](int u, int v) { present.erase(edge_key(n, u, v)); };
    auto has = [&](int u, int v) { return present.count(edge_key(n, u, v)) > 0; };

    // Count multiplicity while seeding the membership set; duplicates and
    // self-loops are left in edge_list and repaired below.
    std::vector<char> bad(edge_list.size(), 0);
    {
        std::unordered_set<long long> seen;
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            auto [u, v] = edge_list[i];
            long long key = edge_key(n, u, v);
            if (u == v || seen.count(key)) bad[i] = 1;
            else {
                seen.insert(key);
                insert_edge(u, v);
            }
        }
    }

    std::vector<std::vector<int>> adj(n);
    auto rebuild_adj = [&]() {
        for (auto& a : adj) a.clear();
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            if (bad[i]) continue;
            adj[edge_list[i].first].push_back(edge_list[i].second);
            adj[edge_list[i].second].push_back(edge_list[i].first);
        }
    };

    // A swap replaces (u,v),(x,y) by (u,x),(v,y) when both new edges are fresh.
    auto try_swap = [&](std::size_t i, bool count_i_in_sets) -> bool {
        auto [u, v] = edge_list[i];
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::size_t j = rand_below(rng, edge_list.size());
            if (j == i || bad[j]) continue;
            auto [x, y] = edge_list[j];
            if (rand_below(rng, 2)) std::swap(x, y);
            if (u == x || u == y || v == x || v == y) continue;
            if (has(u, x) || has(v, y)) continue;
            if (count_i_in_sets) erase_edge(u, v);
            erase_edge(x, y);
            insert_edge(u, x);
            insert_edge(v, y);
            edge_list[i] = {u, x};
            edge_list[j] = {v, y};
            bad[i] = 0;
            return true;
        }
        return false;
    };

    for (int round = 0; round < 100; ++round) {
        bool any_bad = false;
        for (std::size_t i = 0; i < edge_list.size(); ++i)
            if (bad[i]) {
                any_bad = true;
                try_swap(i, false);
            }
        if (any_bad) continue;
        if (min_girth > 3) {
            rebuild_adj();
            for (auto& a : adj) std::sort(a.begin(), a.end());
            std::vector<std::size_t> offenders;
            for (std::size_t i = 0; i < edge_list.size(); ++i) {
                auto [u, v] = edge_list[i];
                const auto& au = adj[u];
                const auto& av = adj[v];
                bool short_cycle = false;
                for (int x : au) {
                    if (x == v) continue;
                    if (std::binary_search(av.begin(), av.end(), x)) { short_cycle = true; break; }
                    if (min_girth >= 5) {
                        for (int y : adj[x]) {  // u-x-y-v square
                            if (y == u || y == v) continue;
                            if (std::binary_search(av.begin(), av.end(), y)) { short_cycle = true; break; }
                        }
                        if (short_cycle) break;
                    }
                }
                if (short_cycle) offenders.push_back(i);
            }
            if (!offenders.empty()) {
                for (std::size_t i : offenders) try_swap(i, true);
                continue;
            }
        }
        Graph g = Graph::from_edges(n, edge_list);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) != d) throw DiagnosticError("regular graph repair lost regularity");
        return g;
    }
    throw DiagnosticError("regular graph repair did not converge");
}

Graph split_to_degree3(const Graph& g) {
    const int n = g.vertex_count();
    bool needs_split = false;
    for (int v = 0; v < n && !needs_split; ++v) needs_split = g.degree(v) > 3;
    if (!needs_split) return g;

    int next = n;
    // attachment ids per (vertex, incident slot in sorted neighbor order)
    std::vector<std::vector<int>> slot_id(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        slot_id[v].resize(std::max(d, 1), v);
        if (d <= 3) continue;
        for (int k = 1; k < d; ++k) slot_id[v][k] = next++;
        for (int k = 0; k + 1 < d; ++k) {
            int s = next++;
            edges.emplace_back(slot_id[v][k], s);
            edges.emplace_back(s, slot_id[v][k + 1]);
        }
    }
    for (int u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbors(u);
        for (int k = 0; k < static_cast<int>(nbrs.size()); ++k) {
            int v = nbrs[k];
            if (u > v) continue;
            const auto& back = g.neighbors(v);
            int kv = static_cast<int>(std::lower_bound(back.begin(), back.end(), u) - back.begin());
            edges.emplace_back(slot_id[u][k], slot_id[v][kv]);
        }
    }
    return Graph::from_edges(next, std::move(edges));
}

}  // namespace bipwalk

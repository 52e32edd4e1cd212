#include "bipwalk/harvest.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "bipwalk/errors.hpp"
#include "bipwalk/exact.hpp"

namespace bipwalk {

int CycleSet::max_length() const {
    std::size_t best = 0;
    for (const auto& c : cycles) best = std::max(best, c.size());
    return static_cast<int>(best);
}

void validate_cycle_set(const Graph& g, const CycleSet& cs) {
    std::set<std::pair<int, int>> used;
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        const auto& c = cs.cycles[i];
        const std::string where = "cycle " + std::to_string(i);
        if (c.size() < 3 || c.size() % 2 == 0)
            throw ValidationError(where + ": length " + std::to_string(c.size()) + " is not odd and >= 3");
        std::set<int> seen(c.begin(), c.end());
        if (seen.size() != c.size()) throw ValidationError(where + ": repeats a vertex");
        for (std::size_t j = 0; j < c.size(); ++j) {
            int u = c[j], v = c[(j + 1) % c.size()];
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
                throw ValidationError(where + ": vertex out of range");
            if (!g.has_edge(u, v))
                throw ValidationError(where + ": edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                      ") is not in the base graph");
            auto key = std::minmax(u, v);
            if (!used.insert(key).second)
                throw ValidationError(where + ": edge (" + std::to_string(key.first) + ", " +
                                      std::to_string(key.second) + ") is used by an earlier cycle");
        }
    }
}

namespace {

struct Residual {
    std::vector<std::pair<int, int>> edges;
    std::vector<char> alive;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)

    explicit Residual(const Graph& g) : edges(g.edges()), alive(edges.size(), 1), adj(g.vertex_count()) {
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [u, v] = edges[e];
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
    }

    Graph to_graph(int n) const {
        std::vector<std::pair<int, int>> kept;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (alive[e]) kept.push_back(edges[e]);
        return Graph::from_edges(n, std::move(kept));
    }

    int find_edge(int u, int v) const {
        for (auto [w, e] : adj[u])
            if (w == v && alive[e]) return e;
        return -1;
    }

    void remove_cycle(const std::vector<int>& cycle) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int e = find_edge(cycle[j], cycle[(j + 1) % cycle.size()]);
            alive[e] = 0;
        }
    }
};

// BFS over alive residual edges from the component's smallest vertex; returns
// the spliced odd cycle through the first same-level alive edge inside the
// component, or nothing when the component currently 2-colors cleanly.
std::vector<int> extract_candidate(const Residual& res, const std::vector<int>& comp, std::vector<int>& dist,
                                   std::vector<int>& parent) {
    int root = comp[0];
    std::deque<int> queue{root};
    std::vector<int> touched{root};
    dist[root] = 0;
    parent[root] = root;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [v, e] : res.adj[u]) {
            if (!res.alive[e] || dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            parent[v] = u;
            touched.push_back(v);
            queue.push_back(v);
        }
    }
    std::vector<char> in_comp(dist.size(), 0);
    for (int v : comp) in_comp[v] = 1;
    std::vector<int> cycle;
    for (int u : comp) {
        if (dist[u] < 0) continue;
        for (auto [v, e] : res.adj[u]) {
            if (!res.alive[e] || u > v || !in_comp[v]) continue;
            if (dist[v] == dist[u]) {
                cycle = splice_cycle(parent, u, v);
                break;
            }
        }
        if (!cycle.empty()) break;
    }
    for (int v : touched) {
        dist[v] = -1;
        parent[v] = -1;
    }
    return cycle;
}

}  // namespace

HarvestResult harvest_odd_cycles(const Graph& g, double epsilon, Rng& rng, const HarvestOptions& opt) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
    const int n = g.vertex_count();
    const double delta = epsilon / 2.0;

    HarvestResult out;
    Residual res(g);
    std::vector<int> dist(n, -1), parent(n, -1);

    auto current_target = [&]() -> long long {
        if (opt.target >= 0) return opt.target;
        if (out.achieved_k == 0) return 1;  // no cycle yet: keep going
        return static_cast<long long>(std::ceil(epsilon * n / (2.0 * out.achieved_k)));
    };

    while (out.rounds_used < opt.max_rounds) {
        if (static_cast<long long>(out.cycles.size()) >= current_target()) {
            out.reached_target = true;
            break;
        }
        ++out.rounds_used;
        Decomposition dec = decompose(res.to_graph(n), delta, rng, opt.decompose);
        bool any_odd = false;
        for (std::size_t c = 0; c < dec.components.size(); ++c) {
            std::vector<int> cycle = extract_candidate(res, dec.components[c], dist, parent);
            if (cycle.empty()) continue;
            any_odd = true;
            if (static_cast<long long>(cycle.size()) > 2 * dec.weak_diameter[c] + 1) continue;  // retry next round
            res.remove_cycle(cycle);
            out.achieved_k = std::max(out.achieved_k, static_cast<int>(cycle.size()));
            out.cycles.cycles.push_back(std::move(cycle));
            if (static_cast<long long>(out.cycles.size()) >= current_target()) break;
        }
        if (!any_odd) break;  // every component 2-colors: nothing left to harvest
    }
    out.target = out.achieved_k == 0 ? 0 : current_target();
    out.reached_target = out.achieved_k > 0 && static_cast<long long>(out.cycles.size()) >= out.target;
    return out;
}

std::vector<char> degree_prune_mask(int vertex_count,
                                    const std::vector<std::vector<std::pair<int, int>>>& cycle_touch,
                                    const std::vector<long long>& reference_degree) {
    const long long total = static_cast<long long>(cycle_touch.size());
    std::vector<char> alive(cycle_touch.size(), 1);
    std::vector<long long> cur(vertex_count, 0);
    std::vector<std::vector<int>> cycles_at(vertex_count);
    for (std::size_t i = 0; i < cycle_touch.size(); ++i)
        for (auto [v, w] : cycle_touch[i]) {
            cur[v] += w;
            cycles_at[v].push_back(static_cast<int>(i));
        }

    // deg_cur(v) <= (|C|/(12 n)) * ref(v), cross-multiplied to stay in integers
    auto violates = [&](int v) {
        return cur[v] > 0 && 12 * cur[v] * vertex_count <= total * reference_degree[v];
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < vertex_count; ++v) {
            if (!violates(v)) continue;
            changed = true;
            for (int i : cycles_at[v]) {
                if (!alive[i]) continue;
                alive[i] = 0;
                for (auto [u, w] : cycle_touch[i]) cur[u] -= w;
            }
        }
    }
    return alive;
}

CycleSet degree_prune(const Graph& g, const CycleSet& cs) {
    if (cs.empty()) throw std::invalid_argument("degree_prune: empty cycle set");
    std::vector<std::vector<std::pair<int, int>>> touch(cs.size());
    for (std::size_t i = 0; i < cs.cycles.size(); ++i)
        for (int v : cs.cycles[i]) touch[i].emplace_back(v, 2);
    std::vector<long long> ref(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) ref[v] = g.degree(v);
    std::vector<char> alive = degree_prune_mask(g.vertex_count(), touch, ref);
    CycleSet out;
    for (std::size_t i = 0; i < cs.cycles.size(); ++i)
        if (alive[i]) out.cycles.push_back(cs.cycles[i]);
    return out;
}

}  // namespace bipwalk

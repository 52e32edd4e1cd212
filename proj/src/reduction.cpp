#include "bipwalk/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bipwalk/errors.hpp"

namespace bipwalk {

GoodPartition GoodPartition::identity(int n) {
    GoodPartition p;
    p.head_of.resize(n);
    std::iota(p.head_of.begin(), p.head_of.end(), 0);
    return p;
}

void check_good_partition(const CycleSet& cs, const GoodPartition& p) {
    const int n = p.size();
    for (int v = 0; v < n; ++v) {
        int h = p.head_of[v];
        if (h < 0 || h >= n)
            throw ValidationError("partition maps vertex " + std::to_string(v) + " outside the vertex range");
    }
    for (int v = 0; v < n; ++v) {
        int h = p.head_of[v];
        if (p.head_of[h] != h)
            throw ValidationError("partition not idempotent: head " + std::to_string(h) + " of vertex " +
                                  std::to_string(v) + " maps on to " + std::to_string(p.head_of[h]));
    }
    std::vector<char> on_cycle(n, 0);
    for (const auto& c : cs.cycles)
        for (int v : c) {
            if (v < 0 || v >= n) throw ValidationError("cycle vertex " + std::to_string(v) + " outside the range");
            on_cycle[v] = 1;
        }
    for (int v = 0; v < n; ++v)
        if (!on_cycle[v] && p.head_of[v] != v)
            throw ValidationError("isolated vertex " + std::to_string(v) + " is not a fixed point (head " +
                                  std::to_string(p.head_of[v]) + ")");
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        const auto& c = cs.cycles[i];
        const int len = static_cast<int>(c.size());
        std::set<int> members(c.begin(), c.end());
        std::map<int, std::vector<int>> positions;  // head -> positions on this cycle
        for (int j = 0; j < len; ++j) {
            int h = p.head_of[c[j]];
            if (!members.count(h))
                throw ValidationError("class of head " + std::to_string(h) + " meets cycle " + std::to_string(i) +
                                      " at vertex " + std::to_string(c[j]) + " but the head is not on the cycle");
            positions[h].push_back(j);
        }
        for (const auto& [h, pos] : positions) {
            if (static_cast<int>(pos.size()) == len) continue;  // whole cycle
            int gaps = 0;
            std::set<int> pos_set(pos.begin(), pos.end());
            for (int j : pos)
                if (!pos_set.count((j + 1) % len)) ++gaps;
            if (gaps != 1)
                throw ValidationError("class of head " + std::to_string(h) + " cuts cycle " + std::to_string(i) +
                                      " into " + std::to_string(gaps) + " arcs instead of one");
        }
    }
}

namespace {

CycleImage image_of(const std::vector<int>& c, const GoodPartition& p, std::size_t cycle_index) {
    const int len = static_cast<int>(c.size());
    std::vector<int> h(len);
    for (int j = 0; j < len; ++j) h[j] = p.head_of[c[j]];

    CycleImage img;
    if (std::all_of(h.begin(), h.end(), [&](int x) { return x == h[0]; })) {
        img.heads = {h[0]};
        img.parities = {static_cast<std::uint8_t>(len % 2)};
        return img;
    }
    int s = 0;
    while (h[s] == h[(s + len - 1) % len]) ++s;
    std::vector<int> head_pos;  // position of each run's head on the base cycle
    for (int off = 0; off < len;) {
        int j = (s + off) % len;
        int run_head = h[j];
        int run_len = 0;
        int pos = -1;
        while (run_len < len && h[(s + off + run_len) % len] == run_head) {
            int at = (s + off + run_len) % len;
            if (c[at] == run_head) pos = at;
            ++run_len;
        }
        if (pos < 0)
            throw ValidationError("head " + std::to_string(run_head) + " missing from its own arc on cycle " +
                                  std::to_string(cycle_index));
        img.heads.push_back(run_head);
        head_pos.push_back(pos);
        off += run_len;
    }
    const int q = static_cast<int>(img.heads.size());
    img.parities.resize(q);
    for (int i = 0; i < q; ++i) {
        int d = (head_pos[(i + 1) % q] - head_pos[i] + len) % len;
        img.parities[i] = static_cast<std::uint8_t>(d % 2);
    }
    return img;
}

}  // namespace

ContractedState build_contracted(int n, CycleSet cs, GoodPartition p) {
    if (p.size() != n) throw ValidationError("partition covers " + std::to_string(p.size()) + " of " +
                                             std::to_string(n) + " vertices");
    check_good_partition(cs, p);

    ContractedState st;
    st.image.base_vertex_count = n;
    st.image.class_size.assign(n, 0);
    for (int v = 0; v < n; ++v) ++st.image.class_size[p.head_of[v]];
    for (int v = 0; v < n; ++v)
        if (p.head_of[v] == v) st.image.vertices.push_back(v);

    st.images.reserve(cs.cycles.size());
    for (std::size_t i = 0; i < cs.cycles.size(); ++i) {
        CycleImage img = image_of(cs.cycles[i], p, i);
        const int q = img.length();
        st.max_image_length = std::max(st.max_image_length, q);
        if (q == 1) {
            st.image.edges.push_back({img.heads[0], img.heads[0], img.parities[0], static_cast<int>(i)});
        } else {
            for (int j = 0; j < q; ++j)
                st.image.edges.push_back(
                    {img.heads[j], img.heads[(j + 1) % q], img.parities[j], static_cast<int>(i)});
        }
        st.images.push_back(std::move(img));
    }
    finalize_multigraph(st.image);
    st.cycles = std::move(cs);
    st.partition = std::move(p);
    return st;
}

GoodPartition refix_isolated(int n, const CycleSet& cs, const GoodPartition& p) {
    std::vector<char> on_cycle(n, 0);
    for (const auto& c : cs.cycles)
        for (int v : c) on_cycle[v] = 1;
    GoodPartition out = p;
    for (int v = 0; v < n; ++v)
        if (!on_cycle[v]) out.head_of[v] = v;
    return out;
}

namespace {

// distinct neighbors of v in the image restricted to alive cycles; a
// self-loop lists v itself
std::set<int> distinct_neighbors(const ContractedState& st, const std::vector<char>& alive, int v) {
    std::set<int> nb;
    for (int e : st.image.incident[v]) {
        const MultiEdge& me = st.image.edges[e];
        if (!alive[me.origin_cycle]) continue;
        nb.insert(me.a == v ? me.b : me.a);
    }
    return nb;
}

}  // namespace

CycleSet assigning_levels(const ContractedState& state) {
    const std::size_t m = state.cycles.size();
    if (m == 0) return {};
    const int n = state.vertex_count();
    const long long k = state.max_image_length;

    std::vector<std::vector<int>> cycles_at(n);  // image vertex -> cycle indices through it
    for (std::size_t i = 0; i < m; ++i)
        for (int h : state.images[i].heads) cycles_at[h].push_back(static_cast<int>(i));

    std::vector<int> level(m, 0);
    std::vector<int> u_at;  // u_at[j-1] is the vertex picked at level j
    std::vector<char> alive(m, 1);
    std::size_t unassigned = m;
    while (unassigned > 0) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            bool touched = false;
            for (int i : cycles_at[v])
                if (alive[i]) {
                    touched = true;
                    break;
                }
            if (touched && distinct_neighbors(state, alive, v).size() <= 6) pick = v;
        }
        if (pick < 0)
            throw DiagnosticError(
                "every non-isolated image vertex has more than 6 distinct neighbors; "
                "the base graph is too dense for the level assignment");
        u_at.push_back(pick);
        const int j = static_cast<int>(u_at.size());
        for (int i : cycles_at[pick])
            if (alive[i]) {
                alive[i] = 0;
                level[i] = j;
                --unassigned;
            }
    }

    std::vector<char> kept(m, 1);
    for (int j = static_cast<int>(u_at.size()); j >= 1; --j) {
        const int u = u_at[j - 1];
        long long a_count = 0, b_count = 0;
        for (int i : cycles_at[u]) {
            if (!kept[i]) continue;
            if (level[i] == j)
                ++a_count;
            else if (level[i] < j)
                ++b_count;
        }
        const bool keep_level = 2 * k * a_count >= b_count;
        for (int i : cycles_at[u]) {
            if (!kept[i]) continue;
            if (keep_level && level[i] < j) kept[i] = 0;
            if (!keep_level && level[i] == j) kept[i] = 0;
        }
    }

    CycleSet out;
    for (std::size_t i = 0; i < m; ++i)
        if (kept[i]) out.cycles.push_back(state.cycles.cycles[i]);
    return out;
}

namespace {

// the two image edges at a vertex of one cycle, as ((neighbor, parity) pairs)
struct IncidentPair {
    int n1, n2;
    std::uint8_t p1, p2;
};

IncidentPair incident_pair(const CycleImage& img, int at) {
    const int q = img.length();
    int prev = (at + q - 1) % q, next = (at + 1) % q;
    return {img.heads[prev], img.heads[next], img.parities[prev], img.parities[at]};
}

}  // namespace

std::vector<char> well_contractible_vertices(const ContractedState& state) {
    const int n = state.vertex_count();
    // per vertex: (cycle, incident pair), plus a self-loop poison flag
    std::vector<std::vector<IncidentPair>> at(n);
    std::vector<char> loop(n, 0);
    for (const auto& img : state.images) {
        if (img.self_loop()) {
            loop[img.heads[0]] = 1;
            continue;
        }
        for (int j = 0; j < img.length(); ++j) at[img.heads[j]].push_back(incident_pair(img, j));
    }
    std::vector<char> wc(n, 0);
    for (int v = 0; v < n; ++v) {
        if (loop[v] || at[v].empty()) continue;
        std::set<int> nb;
        for (const auto& ip : at[v]) {
            nb.insert(ip.n1);
            nb.insert(ip.n2);
        }
        if (nb.size() == 1) {
            wc[v] = 1;
            continue;
        }
        if (nb.size() != 2) continue;
        const int x = *nb.begin(), y = *nb.rbegin();
        bool ok = true;
        std::uint8_t px = 0, py = 0;
        bool first = true;
        for (const auto& ip : at[v]) {
            if (std::min(ip.n1, ip.n2) != x || std::max(ip.n1, ip.n2) != y) {
                ok = false;  // both edges run to the same neighbor while another cycle uses two
                break;
            }
            std::uint8_t ex = ip.n1 == x ? ip.p1 : ip.p2;
            std::uint8_t ey = ip.n1 == x ? ip.p2 : ip.p1;
            if (first) {
                px = ex;
                py = ey;
                first = false;
            } else if (ex != px || ey != py) {
                ok = false;
                break;
            }
        }
        wc[v] = ok ? 1 : 0;
    }
    return wc;
}

ThinResult thin_well_contractible(const ContractedState& state, const ThinOptions& opt, Rng& rng) {
    const int n = state.vertex_count();
    for (const auto& img : state.images)
        if (img.self_loop()) throw std::invalid_argument("thinning requires a self-loop-free image");

    // draw sites: image vertices with <= 6 distinct neighbors
    std::vector<char> all_alive(state.cycles.size(), 1);
    std::vector<int> sites;
    std::vector<std::vector<int>> site_neighbors;
    std::vector<int> site_of(n, -1);
    for (int v : state.image.vertices) {
        if (state.image.incident[v].empty()) continue;
        std::set<int> nb = distinct_neighbors(state, all_alive, v);
        if (nb.size() <= 6) {
            site_of[v] = static_cast<int>(sites.size());
            sites.push_back(v);
            site_neighbors.emplace_back(nb.begin(), nb.end());
        }
    }

    struct Draw {
        int x, y;
        std::uint8_t px, py;
    };
    std::vector<Draw> draw(sites.size());
    std::vector<char> alive(state.cycles.size());
    std::vector<char> best;
    long long best_count = -1;
    long long draws = 0;
    while (true) {
        ++draws;
        for (std::size_t s = 0; s < sites.size(); ++s) {
            const auto& nb = site_neighbors[s];
            int x = nb[rand_below(rng, nb.size())];
            int y = nb[rand_below(rng, nb.size())];
            std::uint8_t px = 0, py = 0;
            if (x != y) {
                px = static_cast<std::uint8_t>(rand_below(rng, 2));
                py = static_cast<std::uint8_t>(rand_below(rng, 2));
            }
            draw[s] = {x, y, px, py};
        }
        long long count = 0;
        for (std::size_t i = 0; i < state.images.size(); ++i) {
            const CycleImage& img = state.images[i];
            bool keep = true;
            for (int j = 0; j < img.length() && keep; ++j) {
                int v = img.heads[j];
                int s = site_of[v];
                if (s < 0) continue;
                const Draw& d = draw[s];
                IncidentPair ip = incident_pair(img, j);
                if (d.x == d.y) {
                    keep = img.length() == 2 && ip.n1 == d.x && ip.n2 == d.x;
                } else {
                    bool straight = ip.n1 == d.x && ip.p1 == d.px && ip.n2 == d.y && ip.p2 == d.py;
                    bool flipped = ip.n1 == d.y && ip.p1 == d.py && ip.n2 == d.x && ip.p2 == d.px;
                    keep = straight || flipped;
                }
            }
            alive[i] = keep ? 1 : 0;
            if (keep) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best = alive;
        }
        if (draws < opt.retries) continue;
        if (opt.until_nonempty && best_count == 0 && draws < opt.draw_cap) continue;
        break;
    }

    ThinResult out;
    out.draws_used = draws;
    for (std::size_t i = 0; i < state.images.size(); ++i)
        if (best[i]) out.cycles.cycles.push_back(state.cycles.cycles[i]);
    if (!out.cycles.empty()) {
        GoodPartition sub = refix_isolated(n, out.cycles, state.partition);
        ContractedState surviving = build_contracted(n, out.cycles, std::move(sub));
        std::vector<char> wc = well_contractible_vertices(surviving);
        for (int v = 0; v < n; ++v)
            if (wc[v]) out.contractible.push_back(v);
    }
    return out;
}

namespace {

// image-flavor retention rule: cycles touch their heads with the number of
// incident image edge records, references come from the pre-step image
std::vector<char> image_degree_prune(const ContractedState& input_state, const ContractedState& current) {
    const int n = current.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> touch(current.cycles.size());
    for (std::size_t i = 0; i < current.images.size(); ++i) {
        const CycleImage& img = current.images[i];
        for (int h : img.heads) touch[i].emplace_back(h, img.self_loop() ? 1 : 2);
    }
    std::vector<long long> ref(n, 0);
    for (int v : input_state.image.vertices) ref[v] = input_state.image.degree(v);
    return degree_prune_mask(n, touch, ref);
}

}  // namespace

MainStepResult main_step(const ContractedState& state, const ThinOptions& thin, Rng& rng) {
    const int n = state.vertex_count();
    CycleSet loops, rest;
    for (std::size_t i = 0; i < state.images.size(); ++i)
        (state.images[i].self_loop() ? loops : rest).cycles.push_back(state.cycles.cycles[i]);

    if (loops.size() >= rest.size())
        return {loops, {}, refix_isolated(n, loops, state.partition)};

    GoodPartition p1 = refix_isolated(n, rest, state.partition);
    ContractedState s1 = build_contracted(n, std::move(rest), std::move(p1));

    CycleSet leveled = assigning_levels(s1);
    GoodPartition p2 = refix_isolated(n, leveled, s1.partition);
    ContractedState s2 = build_contracted(n, std::move(leveled), std::move(p2));

    ThinResult thinned = thin_well_contractible(s2, thin, rng);
    if (thinned.cycles.empty())
        return {{}, {}, refix_isolated(n, thinned.cycles, s2.partition)};
    GoodPartition p3 = refix_isolated(n, thinned.cycles, s2.partition);
    ContractedState s3 = build_contracted(n, thinned.cycles, std::move(p3));

    std::vector<char> alive = image_degree_prune(state, s3);
    CycleSet pruned;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) pruned.cycles.push_back(s3.cycles.cycles[i]);
    GoodPartition p4 = refix_isolated(n, pruned, s3.partition);
    ContractedState s4 = build_contracted(n, pruned, p4);

    std::vector<char> wc = well_contractible_vertices(s4);
    std::vector<char> certified(n, 0);
    for (int v : thinned.contractible) certified[v] = 1;
    std::vector<char> blocked(n, 0);
    std::vector<int> q;
    for (int v = 0; v < n; ++v) {
        if (!wc[v] || !certified[v] || blocked[v]) continue;
        q.push_back(v);
        for (int e : s4.image.incident[v]) {
            const MultiEdge& me = s4.image.edges[e];
            blocked[me.a == v ? me.b : me.a] = 1;
        }
    }
    return {std::move(pruned), std::move(q), std::move(p4)};
}

ContractedState contract_step(const ContractedState& state, const std::vector<int>& q) {
    const int n = state.vertex_count();
    std::vector<char> wc = well_contractible_vertices(state);
    std::vector<char> in_q(n, 0);
    for (int u : q) {
        if (u < 0 || u >= n || state.image.incident[u].empty())
            throw ValidationError("contraction vertex " + std::to_string(u) + " is not on the image");
        if (!wc[u])
            throw ValidationError("contraction vertex " + std::to_string(u) + " is not well-contractible");
        in_q[u] = 1;
    }
    for (int u : q)
        for (int e : state.image.incident[u]) {
            const MultiEdge& me = state.image.edges[e];
            int other = me.a == u ? me.b : me.a;
            if (in_q[other])
                throw ValidationError("contraction vertices " + std::to_string(u) + " and " + std::to_string(other) +
                                      " are adjacent");
        }

    GoodPartition next = state.partition;
    for (int u : q) {
        std::map<int, int> multiplicity;
        for (int e : state.image.incident[u]) {
            const MultiEdge& me = state.image.edges[e];
            ++multiplicity[me.a == u ? me.b : me.a];
        }
        int gamma = -1, best = 0;
        for (const auto& [w, count] : multiplicity)
            if (count > best) {
                gamma = w;
                best = count;
            }
        for (int v = 0; v < n; ++v)
            if (state.partition.head_of[v] == u) next.head_of[v] = gamma;
    }
    return build_contracted(n, state.cycles, std::move(next));
}

ReductionChain reduce_to_selfloops(int n, const CycleSet& cs, Rng& rng, const ReductionOptions& opt) {
    if (cs.empty()) throw std::invalid_argument("reduce_to_selfloops: empty cycle set");
    ReductionChain chain;
    chain.states.push_back(build_contracted(n, cs, GoodPartition::identity(n)));
    chain.kinds.push_back(ReductionStepKind::initial);

    const int k = chain.states.front().max_image_length;
    while (!chain.states.back().all_self_loops()) {
        if (chain.contract_steps >= k)
            throw ReductionCollapseError("no all-self-loop state after " + std::to_string(chain.contract_steps) +
                                             " contractions",
                                         std::move(chain));
        MainStepResult ms = main_step(chain.states.back(), opt.thin, rng);
        if (ms.cycles.empty())
            throw ReductionCollapseError("cycle set emptied out after " + std::to_string(chain.contract_steps) +
                                             " contractions",
                                         std::move(chain));
        chain.states.push_back(build_contracted(n, std::move(ms.cycles), std::move(ms.partition)));
        chain.kinds.push_back(ReductionStepKind::main);
        if (chain.states.back().all_self_loops()) break;
        chain.states.push_back(contract_step(chain.states.back(), ms.q));
        chain.kinds.push_back(ReductionStepKind::contract);
        ++chain.contract_steps;
    }
    return chain;
}

}  // namespace bipwalk

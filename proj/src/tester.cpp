#include "bipwalk/tester.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "bipwalk/parity_dsu.hpp"

namespace bipwalk {

namespace {

// remaps the handful of visited vertex ids into a dense union-find sized for
// the walk up front
class WalkParity {
  public:
    explicit WalkParity(int capacity) : dsu_(capacity) { ids_.reserve(static_cast<std::size_t>(capacity)); }

    bool add_edge(int u, int v, std::uint8_t parity) { return dsu_.add_edge(id(u), id(v), parity); }

  private:
    int id(int v) { return ids_.try_emplace(v, static_cast<int>(ids_.size())).first->second; }

    std::unordered_map<int, int> ids_;
    ParityDsu dsu_;
};

}  // namespace

WalkTrace random_walk_test(Oracle& h, int t, Rng& rng) {
    const int n = h.vertex_count();
    if (n <= 0) throw std::invalid_argument("walk on an empty graph");
    WalkTrace trace;
    trace.start = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
    if (h.degree(trace.start) == 0) return trace;

    WalkParity dsu(t + 1);
    int cur = trace.start;
    for (int step = 0; step < t; ++step) {
        int nxt = h.random_neighbor(cur, rng);
        bool conflict = dsu.add_edge(cur, nxt, 1);
        trace.steps.push_back({cur, nxt, 1});
        if (conflict && !trace.detected_at) trace.detected_at = step;
        cur = nxt;
    }
    return trace;
}

ExplorerResult bipartiteness_explorer(Oracle& h, int f, int g, Rng& rng) {
    if (f < 1 || g < 1) throw std::invalid_argument("explorer needs f, g >= 1");
    ExplorerResult out;
    const long long before = h.counters().total();
    for (int i = 0; i < f; ++i) {
        WalkTrace trace = random_walk_test(h, g, rng);
        ++out.walks_run;
        if (trace.detected()) {
            out.accept = false;
            out.witness = std::move(trace);
            break;
        }
    }
    out.queries = h.counters().total() - before;
    return out;
}

TesterParams default_params(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
    const double inv = std::ceil(1.0 / epsilon);
    return {static_cast<int>(8 * inv * inv), static_cast<int>(std::ceil(64.0 / epsilon))};
}

WalkTrace multigraph_random_walk(const ContractedMultigraph& m, int t, Rng& rng) {
    const int n = m.base_vertex_count;
    if (n <= 0) throw std::invalid_argument("walk on an empty multigraph");

    // class-mass start: the r-th unit of mass, scanned over image vertices
    long long r = static_cast<long long>(rand_below(rng, static_cast<std::uint64_t>(n)));
    int start = -1;
    for (int v : m.vertices) {
        if (r < m.class_size[v]) {
            start = v;
            break;
        }
        r -= m.class_size[v];
    }

    WalkTrace trace;
    trace.start = start;
    if (m.degree(start) == 0) return trace;
    WalkParity dsu(t + 1);
    int cur = start;
    for (int step = 0; step < t; ++step) {
        const auto& inc = m.incident[cur];
        const MultiEdge& e = m.edges[inc[rand_below(rng, inc.size())]];
        int nxt = e.a == cur ? e.b : e.a;
        bool conflict = dsu.add_edge(cur, nxt, e.parity);
        trace.steps.push_back({cur, nxt, e.parity});
        if (conflict && !trace.detected_at) trace.detected_at = step;
        cur = nxt;
    }
    return trace;
}

std::pair<double, double> wilson_interval(long long successes, long long trials) {
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = p + z2 / (2.0 * nn);
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    return {std::max(0.0, (center - half) / denom), std::min(1.0, (center + half) / denom)};
}

namespace {

template <typename WalkFn>
DetectionEstimate run_trials(int t, long long trials, std::uint64_t seed, WalkFn&& walk) {
    if (trials < 100) throw std::invalid_argument("need at least 100 trials");
    DetectionEstimate est;
    est.trials = trials;
    for (long long i = 0; i < trials; ++i) {
        Rng rng = derive_rng(seed, static_cast<std::uint64_t>(i));
        if (walk(t, rng)) ++est.detections;
    }
    est.p_hat = static_cast<double>(est.detections) / static_cast<double>(trials);
    auto [lo, hi] = wilson_interval(est.detections, trials);
    est.ci_low = lo;
    est.ci_high = hi;
    return est;
}

}  // namespace

DetectionEstimate estimate_detection_probability(const Graph& g, int t, long long trials, std::uint64_t seed) {
    GraphOracle oracle(g);
    DetectionEstimate est =
        run_trials(t, trials, seed, [&](int len, Rng& rng) { return random_walk_test(oracle, len, rng).detected(); });
    est.queries_total = oracle.counters().total();
    return est;
}

DetectionEstimate estimate_detection_probability(const ContractedMultigraph& m, int t, long long trials,
                                                 std::uint64_t seed) {
    return run_trials(t, trials, seed,
                      [&](int len, Rng& rng) { return multigraph_random_walk(m, len, rng).detected(); });
}

}  // namespace bipwalk

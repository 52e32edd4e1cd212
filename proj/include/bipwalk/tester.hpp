#pragma once

#include <cstdint>
#include <optional>

#include "bipwalk/graph.hpp"
#include "bipwalk/multigraph.hpp"
#include "bipwalk/oracle.hpp"
#include "bipwalk/rng.hpp"
#include "bipwalk/walk.hpp"

namespace bipwalk {

// One random walk of length t from a uniformly random start vertex. Every
// traversed edge feeds a parity union-find; detected_at records the first
// step whose edge certified an odd cycle, but the walk always runs to full
// length. Costs one degree query plus one random-neighbor query per step; an
// isolated start ends the walk immediately.
WalkTrace random_walk_test(Oracle& h, int t, Rng& rng);

struct ExplorerResult {
    bool accept = true;
    long long queries = 0;                 // oracle queries this run spent
    int walks_run = 0;
    std::optional<WalkTrace> witness;      // the detecting walk, if any
};

// Up to f independent walks of length g; rejects as soon as one detects.
// Total queries never exceed f * (2g + 1) regardless of the graph size.
ExplorerResult bipartiteness_explorer(Oracle& h, int f, int g, Rng& rng);

struct TesterParams {
    int t;  // walk length
    int f;  // walk count
};

// Empirical defaults: t = 8 * ceil(1/eps)^2 and f = ceil(64/eps), calibrated
// on the bundled far-from-bipartite families.
TesterParams default_params(double epsilon);

// Walk on a contracted multigraph: the start vertex is drawn with probability
// class_size(u)/|V|, each step picks a uniformly random incident edge record
// (a self-loop counts once), and traversed parities feed the union-find.
WalkTrace multigraph_random_walk(const ContractedMultigraph& m, int t, Rng& rng);

struct DetectionEstimate {
    long long trials = 0;
    long long detections = 0;
    double p_hat = 0;
    double ci_low = 0;       // 95% Wilson interval
    double ci_high = 0;
    long long queries_total = 0;  // oracle queries across all trials (graph flavor only)
};

// Monte-Carlo detection frequency over independent trials, each on its own
// random stream derived from (seed, trial index), so the result is
// reproducible and independent of evaluation order.
DetectionEstimate estimate_detection_probability(const Graph& g, int t, long long trials, std::uint64_t seed);
DetectionEstimate estimate_detection_probability(const ContractedMultigraph& m, int t, long long trials,
                                                 std::uint64_t seed);

// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(long long successes, long long trials);

}  // namespace bipwalk

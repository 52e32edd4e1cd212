#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "bipwalk/graph.hpp"
#include "bipwalk/rng.hpp"

namespace bipwalk {

struct ExperimentConfig {
    std::string family = "triangle-chain";
    std::vector<long long> sizes;  // approximate vertex counts, one row each
    double epsilon = 0.3;
    int t = 0;  // 0 derives both from epsilon
    int f = 0;
    long long trials = 10000;
    std::uint64_t seed = 0;
    // family knobs
    int path_len = 1;
    int hubs = 2;
    int degree = 12;
    bool include_timings = false;  // wall_ms column is non-deterministic, off by default
};

struct ExperimentRow {
    long long requested_size = 0;
    long long n = 0;
    long long edges = 0;
    long long trials = 0;
    long long detections = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
    double queries_mean = 0;
    double wall_ms = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ExperimentRow> rows;
    std::string fingerprint;
};

// Instance of the named family sized to roughly `size` vertices. Knows
// even-cycle, grid, triangle-chain, parallel-cycles, expander-triangles and
// random-regular; unknown names throw std::invalid_argument.
Graph make_family_instance(const std::string& family, long long size, const ExperimentConfig& cfg, Rng& rng);

// One detection-probability row per requested size. Per-size seeds derive
// from (cfg.seed, row index), so rows do not depend on each other.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

// Writers are byte-deterministic for a fixed config and seed; wall_ms is
// emitted only when the config asks for timings.
void write_report_csv(std::ostream& out, const ExperimentReport& report);
void write_report_json(std::ostream& out, const ExperimentReport& report);

// Compile-time environment constants (compiler, standard, word size); stable
// across runs of one binary.
std::string environment_fingerprint();

}  // namespace bipwalk

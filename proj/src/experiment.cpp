#include "bipwalk/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "bipwalk/generators.hpp"
#include "bipwalk/tester.hpp"

namespace bipwalk {

Graph make_family_instance(const std::string& family, long long size, const ExperimentConfig& cfg, Rng& rng) {
    if (size < 1) throw std::invalid_argument("instance size must be positive");
    if (family == "even-cycle") {
        long long n = std::max<long long>(4, size + (size % 2));
        return gen_even_cycle(static_cast<int>(n));
    }
    if (family == "grid") {
        int side = std::max(2, static_cast<int>(std::llround(std::sqrt(static_cast<double>(size)))));
        return gen_grid(side, side);
    }
    if (family == "triangle-chain") {
        long long m = std::max<long long>(1, (size - 1) / 2);
        return gen_triangle_chain(static_cast<int>(m));
    }
    if (family == "parallel-cycles") {
        long long per_path = std::max(1, cfg.path_len) * 2;  // interior vertices per path, roughly
        long long paths = std::max<long long>(2, (size - cfg.hubs) / per_path);
        return gen_parallel_cycles(cfg.hubs, static_cast<int>(paths), cfg.path_len);
    }
    if (family == "expander-triangles") {
        Graph seed_graph = random_regular_graph(static_cast<int>(size), cfg.degree, 5, rng);
        return gen_expander_triangles(seed_graph);
    }
    if (family == "random-regular") {
        return random_regular_graph(static_cast<int>(size), cfg.degree, 5, rng);
    }
    throw std::invalid_argument("unknown family: " + family);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty()) throw std::invalid_argument("no sizes requested");
    if (cfg.trials < 100) throw std::invalid_argument("need at least 100 trials");
    if (!(cfg.epsilon > 0.0) || !(cfg.epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");

    ExperimentReport report;
    report.config = cfg;
    TesterParams params = default_params(cfg.epsilon);
    if (cfg.t > 0) params.t = cfg.t;
    if (cfg.f > 0) params.f = cfg.f;
    report.config.t = params.t;
    report.config.f = params.f;
    report.fingerprint = environment_fingerprint();

    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
        const auto begin = std::chrono::steady_clock::now();
        std::uint64_t row_seed = derive_seed(cfg.seed, i);
        Rng gen_rng = make_rng(row_seed);
        Graph g;
        DetectionEstimate est;
        try {
            g = make_family_instance(cfg.family, cfg.sizes[i], cfg, gen_rng);
            est = estimate_detection_probability(g, params.t, cfg.trials, row_seed);
        } catch (const std::exception& e) {
            throw std::runtime_error("size " + std::to_string(cfg.sizes[i]) + ": " + e.what());
        }

        ExperimentRow row;
        row.requested_size = cfg.sizes[i];
        row.n = g.vertex_count();
        row.edges = g.edge_count();
        row.trials = est.trials;
        row.detections = est.detections;
        row.p_hat = est.p_hat;
        row.ci_low = est.ci_low;
        row.ci_high = est.ci_high;
        row.queries_mean = static_cast<double>(est.queries_total) / static_cast<double>(est.trials);
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - begin).count();
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

void write_report_csv(std::ostream& out, const ExperimentReport& report) {
    out << "family,requested_size,n,edges,epsilon,t,f,trials,detections,p_hat,ci_low,ci_high,queries_mean,seed";
    if (report.config.include_timings) out << ",wall_ms";
    out << "\n";
    for (const auto& r : report.rows) {
        out << report.config.family << ',' << r.requested_size << ',' << r.n << ',' << r.edges << ','
            << fixed6(report.config.epsilon) << ',' << report.config.t << ',' << report.config.f << ',' << r.trials
            << ',' << r.detections << ',' << fixed6(r.p_hat) << ',' << fixed6(r.ci_low) << ',' << fixed6(r.ci_high)
            << ',' << fixed6(r.queries_mean) << ',' << report.config.seed;
        if (report.config.include_timings) out << ',' << fixed6(r.wall_ms);
        out << "\n";
    }
}

void write_report_json(std::ostream& out, const ExperimentReport& report) {
    nlohmann::json doc;
    doc["config"] = {{"family", report.config.family},     {"sizes", report.config.sizes},
                     {"epsilon", report.config.epsilon},   {"t", report.config.t},
                     {"f", report.config.f},               {"trials", report.config.trials},
                     {"seed", report.config.seed},         {"path_len", report.config.path_len},
                     {"hubs", report.config.hubs},         {"degree", report.config.degree}};
    doc["environment"] = report.fingerprint;
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json row = {{"requested_size", r.requested_size},
                              {"n", r.n},
                              {"edges", r.edges},
                              {"trials", r.trials},
                              {"detections", r.detections},
                              {"p_hat", r.p_hat},
                              {"ci_low", r.ci_low},
                              {"ci_high", r.ci_high},
                              {"queries_mean", r.queries_mean}};
        if (report.config.include_timings) row["wall_ms"] = r.wall_ms;
        doc["rows"].push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
}

std::string environment_fingerprint() {
    std::string out = "c++" + std::to_string(__cplusplus / 100 % 100);
#if defined(__clang__)
    out += " clang " + std::to_string(__clang_major__) + "." + std::to_string(__clang_minor__);
#elif defined(__GNUC__)
    out += " gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#endif
    out += " " + std::to_string(sizeof(void*) * 8) + "-bit";
    return out;
}

}  // namespace bipwalk

#include "bipwalk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipwalk/decomposition.hpp"
#include "bipwalk/exact.hpp"
#include "bipwalk/experiment.hpp"
#include "bipwalk/generators.hpp"
#include "bipwalk/graph.hpp"
#include "bipwalk/harvest.hpp"
#include "bipwalk/oracle.hpp"
#include "bipwalk/reduction.hpp"
#include "bipwalk/rng.hpp"
#include "bipwalk/tester.hpp"

namespace bipwalk {
namespace {

const std::vector<std::string> kFamilies = {"even-cycle",      "grid",           "triangle-chain",
                                            "parallel-cycles", "random-regular", "expander-triangles"};

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

void require_epsilon(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("epsilon must be in (0, 1)");
}

TesterParams resolve_params(double epsilon, int t, int f) {
    require_epsilon(epsilon);
    TesterParams p = default_params(epsilon);
    if (t > 0) p.t = t;
    if (f > 0) p.f = f;
    return p;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    return file;
}

std::uint64_t pick_seed(bool seed_given, std::uint64_t seed, std::ostream& err) {
    if (seed_given) return seed;
    const std::uint64_t drawn = entropy_seed();
    err << "seed: " << drawn << "\n";
    return drawn;
}

struct GenArgs {
    std::string family;
    int n = 100;
    int m = 4;
    int rows = 3;
    int cols = 3;
    int paths = 3;
    int path_len = 1;
    int hubs = 2;
    int degree = 12;
    int min_girth = 5;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;
};

int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    Graph g;
    std::string desc = "bipwalk gen " + a.family;
    if (a.family == "even-cycle") {
        g = gen_even_cycle(a.n);
        desc += " n=" + std::to_string(a.n);
    } else if (a.family == "grid") {
        g = gen_grid(a.rows, a.cols);
        desc += " rows=" + std::to_string(a.rows) + " cols=" + std::to_string(a.cols);
    } else if (a.family == "triangle-chain") {
        g = gen_triangle_chain(a.m);
        desc += " m=" + std::to_string(a.m);
    } else if (a.family == "parallel-cycles") {
        g = gen_parallel_cycles(a.hubs, a.paths, a.path_len);
        desc += " hubs=" + std::to_string(a.hubs) + " paths=" + std::to_string(a.paths) +
                " path-len=" + std::to_string(a.path_len);
    } else {
        const std::uint64_t seed = pick_seed(a.seed_given, a.seed, err);
        Rng rng = make_rng(seed);
        if (a.family == "random-regular") {
            g = random_regular_graph(a.n, a.degree, a.min_girth, rng);
        } else {
            g = gen_expander_triangles(random_regular_graph(a.n, a.degree, a.min_girth, rng));
        }
        desc += " n=" + std::to_string(a.n) + " degree=" + std::to_string(a.degree) +
                " min-girth=" + std::to_string(a.min_girth) + " seed=" + std::to_string(seed);
    }
    if (a.out_path.empty()) {
        write_graph(out, g, {desc});
    } else {
        write_graph_file(a.out_path, g, {desc});
    }
    return 0;
}

struct TestArgs {
    std::string input;
    double epsilon = 0.3;
    int t = 0;
    int f = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool json = false;
};

int run_test(const TestArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_file(a.input);
    const TesterParams p = resolve_params(a.epsilon, a.t, a.f);
    const std::uint64_t seed = pick_seed(a.seed_given, a.seed, err);
    GraphOracle oracle(g);
    Rng rng = make_rng(seed);
    const ExplorerResult r = bipartiteness_explorer(oracle, p.f, p.t, rng);
    if (a.json) {
        nlohmann::ordered_json doc{{"instance", a.input}, {"t", p.t},
                                   {"f", p.f},            {"accept", r.accept},
                                   {"walks_run", r.walks_run}, {"queries", r.queries},
                                   {"seed", seed}};
        out << doc.dump(2) << "\n";
    } else {
        out << (r.accept ? "accept" : "reject") << "\n";
    }
    return r.accept ? 0 : 1;
}

struct EstimateArgs {
    std::string input;
    double epsilon = 0.3;
    int t = 0;
    int f = 0;
    long long trials = 10000;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int run_estimate(const EstimateArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_file(a.input);
    const TesterParams p = resolve_params(a.epsilon, a.t, a.f);
    const std::uint64_t seed = pick_seed(a.seed_given, a.seed, err);
    const DetectionEstimate est = estimate_detection_probability(g, p.t, a.trials, seed);
    nlohmann::ordered_json doc{{"instance", a.input},
                               {"t", p.t},
                               {"f", p.f},
                               {"trials", est.trials},
                               {"detections", est.detections},
                               {"p_hat", est.p_hat},
                               {"ci_low", est.ci_low},
                               {"ci_high", est.ci_high},
                               {"queries_total", est.queries_total},
                               {"seed", seed}};
    out << doc.dump(2) << "\n";
    return 0;
}

struct HarvestArgs {
    std::string input;
    double epsilon = 0.3;
    long long target = -1;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;
};

int run_harvest(const HarvestArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_file(a.input);
    require_epsilon(a.epsilon);
    const std::uint64_t seed = pick_seed(a.seed_given, a.seed, err);
    Rng rng = make_rng(seed);
    HarvestOptions opt;
    opt.target = a.target;
    const HarvestResult res = harvest_odd_cycles(g, a.epsilon, rng, opt);
    out << "cycles: " << res.cycles.size() << "\n";
    out << "max_length: " << res.achieved_k << "\n";
    out << "target: " << res.target << "\n";
    out << "reached_target: " << (res.reached_target ? "yes" : "no") << "\n";
    out << "rounds: " << res.rounds_used << "\n";
    if (!a.out_path.empty()) {
        std::ofstream file = open_output(a.out_path);
        file << "# bipwalk harvest " << a.input << " epsilon=" << fixed6(a.epsilon) << " seed=" << seed << "\n";
        file << "# one cycle per line, vertices in traversal order\n";
        for (const auto& cycle : res.cycles.cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) file << (i ? " " : "") << cycle[i];
            file << "\n";
        }
    }
    return 0;
}

struct DecomposeArgs {
    std::string input;
    double delta = 0;
    double c_diameter = 54.0;
    int retries = 16;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int run_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_file(a.input);
    const std::uint64_t seed = pick_seed(a.seed_given, a.seed, err);
    Rng rng = make_rng(seed);
    DecomposeOptions opt;
    opt.c_diameter = a.c_diameter;
    opt.retries = a.retries;
    const Decomposition d = decompose(g, a.delta, rng, opt);
    long long worst = 0;
    for (long long w : d.weak_diameter) worst = std::max(worst, w);
    out << "components: " << d.components.size() << "\n";
    out << "cut_edges: " << d.cut_edges.size() << "\n";
    out << "cut_budget: " << static_cast<long long>(a.delta * g.vertex_count()) << "\n";
    out << "max_weak_diameter: " << worst << "\n";
    out << "diameter_bound: " << fixed6(d.diameter_bound) << "\n";
    out << "attempts: " << d.attempts_used << "\n";
    out << "recursion: " << d.recursion_used << "\n";
    return 0;
}

struct ReduceArgs {
    std::string input;
    double epsilon = 0.3;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;
};

const char* kind_name(ReductionStepKind kind) {
    switch (kind) {
        case ReductionStepKind::initial: return "initial";
        case ReductionStepKind::main: return "main";
        default: return "contract";
    }
}

void write_reduction_audit(std::ostream& os, const ReductionChain& chain) {
    os << "step,kind,cycles,max_image_length,self_loops,retention\n";
    const double initial = static_cast<double>(chain.states.front().cycles.size());
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
        const ContractedState& st = chain.states[i];
        long long loops = 0;
        for (const auto& img : st.images) loops += img.self_loop() ? 1 : 0;
        os << i << ',' << kind_name(chain.kinds[i]) << ',' << st.cycles.size() << ',' << st.max_image_length << ','
           << loops << ',' << fixed6(static_cast<double>(st.cycles.size()) / initial) << "\n";
    }
}

int run_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph_file(a.input);
    require_epsilon(a.epsilon);
    const std::uint64_t seed = pick_seed(a.seed_given, a.seed, err);
    Rng rng = make_rng(seed);
    const HarvestResult harvested = harvest_odd_cycles(g, a.epsilon, rng);
    if (harvested.cycles.empty()) {
        out << "no odd cycles found; nothing to reduce\n";
        return 0;
    }
    const CycleSet pruned = degree_prune(g, harvested.cycles);
    const ReductionChain chain = reduce_to_selfloops(g.vertex_count(), pruned, rng);
    if (a.out_path.empty()) {
        write_reduction_audit(out, chain);
    } else {
        std::ofstream file = open_output(a.out_path);
        write_reduction_audit(file, chain);
        out << "steps: " << chain.states.size() << "\n";
        out << "contract_steps: " << chain.contract_steps << "\n";
        out << "final_cycles: " << chain.final_state().cycles.size() << "\n";
    }
    return 0;
}

struct DistanceArgs {
    std::string input;
    bool packing = false;
    int length_cap = 0;
};

int run_distance(const DistanceArgs& a, std::ostream& out) {
    const Graph g = load_graph_file(a.input);
    const long long d = a.packing ? packing_lower_bound(g, a.length_cap) : distance_to_bipartite_exact(g);
    out << d << "\n";
    return 0;
}

struct ExperimentArgs {
    ExperimentConfig cfg;
    bool seed_given = false;
    std::string out_csv;
    std::string out_json;
};

int run_experiment_cmd(ExperimentArgs& a, std::ostream& out, std::ostream& err) {
    a.cfg.seed = pick_seed(a.seed_given, a.cfg.seed, err);
    const ExperimentReport report = run_experiment(a.cfg);
    if (a.out_csv.empty()) {
        write_report_csv(out, report);
    } else {
        std::ofstream file = open_output(a.out_csv);
        write_report_csv(file, report);
    }
    if (!a.out_json.empty()) {
        std::ofstream file = open_output(a.out_json);
        write_report_json(file, report);
    }
    return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"random-walk bipartiteness testing toolkit", "bipwalk"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "write a generator instance as an edge-list file");
    gen_cmd->add_option("family", gen.family, "instance family")->required()->check(CLI::IsMember(kFamilies));
    gen_cmd->add_option("--n", gen.n, "vertex count (even-cycle, random-regular, expander-triangles seed)");
    gen_cmd->add_option("--m", gen.m, "triangle count (triangle-chain)");
    gen_cmd->add_option("--rows", gen.rows, "grid rows");
    gen_cmd->add_option("--cols", gen.cols, "grid columns");
    gen_cmd->add_option("--paths", gen.paths, "path count (parallel-cycles)");
    gen_cmd->add_option("--path-len", gen.path_len, "path length (parallel-cycles)");
    gen_cmd->add_option("--hubs", gen.hubs, "hub count, 1 or 2 (parallel-cycles)");
    gen_cmd->add_option("--degree", gen.degree, "regularity (random-regular, expander-triangles)");
    gen_cmd->add_option("--min-girth", gen.min_girth, "short cycles to swap away, up to 5");
    CLI::Option* gen_seed = gen_cmd->add_option("--seed", gen.seed, "rng seed for the random families");
    gen_cmd->add_option("--out", gen.out_path, "output file (default stdout)");

    TestArgs test;
    CLI::App* test_cmd = app.add_subcommand("test", "run the bipartiteness explorer on an edge-list file");
    test_cmd->add_option("--input", test.input, "graph file")->required();
    test_cmd->add_option("--epsilon", test.epsilon, "distance parameter deriving t and f");
    test_cmd->add_option("--t", test.t, "walk length override");
    test_cmd->add_option("--f", test.f, "walk count override");
    CLI::Option* test_seed = test_cmd->add_option("--seed", test.seed, "rng seed");
    test_cmd->add_flag("--json", test.json, "machine-readable result");

    EstimateArgs est;
    CLI::App* est_cmd = app.add_subcommand("estimate", "single-walk detection probability with confidence interval");
    est_cmd->add_option("--input", est.input, "graph file")->required();
    est_cmd->add_option("--epsilon", est.epsilon, "distance parameter deriving t and f");
    est_cmd->add_option("--t", est.t, "walk length override");
    est_cmd->add_option("--f", est.f, "walk count echoed into the report");
    est_cmd->add_option("--trials", est.trials, "Monte-Carlo trials, at least 100");
    CLI::Option* est_seed = est_cmd->add_option("--seed", est.seed, "rng seed");

    HarvestArgs harvest;
    CLI::App* harvest_cmd = app.add_subcommand("harvest", "collect edge-disjoint short odd cycles");
    harvest_cmd->add_option("--input", harvest.input, "graph file")->required();
    harvest_cmd->add_option("--epsilon", harvest.epsilon, "distance parameter");
    harvest_cmd->add_option("--target", harvest.target, "cycle count to stop at (-1 derives from epsilon)");
    CLI::Option* harvest_seed = harvest_cmd->add_option("--seed", harvest.seed, "rng seed");
    harvest_cmd->add_option("--out", harvest.out_path, "cycle list output file");

    DecomposeArgs dec;
    CLI::App* dec_cmd = app.add_subcommand("decompose", "low-diameter edge cutting");
    dec_cmd->add_option("--input", dec.input, "graph file")->required();
    dec_cmd->add_option("--delta", dec.delta, "cut budget fraction in (0, 1)")->required();
    dec_cmd->add_option("--c-diameter", dec.c_diameter, "weak diameter bound numerator");
    dec_cmd->add_option("--retries", dec.retries, "attempts before giving up");
    CLI::Option* dec_seed = dec_cmd->add_option("--seed", dec.seed, "rng seed");

    ReduceArgs red;
    CLI::App* red_cmd = app.add_subcommand("reduce", "harvest, prune, and contract cycles down to self-loops");
    red_cmd->add_option("--input", red.input, "graph file")->required();
    red_cmd->add_option("--epsilon", red.epsilon, "distance parameter");
    CLI::Option* red_seed = red_cmd->add_option("--seed", red.seed, "rng seed");
    red_cmd->add_option("--out", red.out_path, "audit CSV output file (default stdout)");

    DistanceArgs dist;
    CLI::App* dist_cmd = app.add_subcommand("distance", "edge deletions to bipartiteness");
    dist_cmd->add_option("--input", dist.input, "graph file")->required();
    dist_cmd->add_flag("--packing", dist.packing, "certified lower bound instead of the exact count");
    dist_cmd->add_option("--length-cap", dist.length_cap, "stop packing at cycles longer than this (0 = uncapped)");

    ExperimentArgs expt;
    CLI::App* expt_cmd = app.add_subcommand("experiment", "detection-probability rows across instance sizes");
    expt_cmd->add_option("--family", expt.cfg.family, "instance family")->check(CLI::IsMember(kFamilies));
    expt_cmd->add_option("--sizes", expt.cfg.sizes, "comma-separated vertex counts")->required()->delimiter(',');
    expt_cmd->add_option("--epsilon", expt.cfg.epsilon, "distance parameter deriving t and f");
    expt_cmd->add_option("--t", expt.cfg.t, "walk length override");
    expt_cmd->add_option("--f", expt.cfg.f, "walk count override");
    expt_cmd->add_option("--trials", expt.cfg.trials, "Monte-Carlo trials per size");
    CLI::Option* expt_seed = expt_cmd->add_option("--seed", expt.cfg.seed, "rng seed");
    expt_cmd->add_option("--path-len", expt.cfg.path_len, "parallel-cycles path length");
    expt_cmd->add_option("--hubs", expt.cfg.hubs, "parallel-cycles hub count");
    expt_cmd->add_option("--degree", expt.cfg.degree, "regular-seed degree");
    expt_cmd->add_option("--out-csv", expt.out_csv, "CSV output file (default stdout)");
    expt_cmd->add_option("--out-json", expt.out_json, "JSON output file");
    expt_cmd->add_flag("--timings", expt.cfg.include_timings, "include wall-clock column (non-deterministic)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bipwalk");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << e.what() << "\n\n" << target->help();
        return 2;
    }

    gen.seed_given = gen_seed->count() > 0;
    test.seed_given = test_seed->count() > 0;
    est.seed_given = est_seed->count() > 0;
    harvest.seed_given = harvest_seed->count() > 0;
    dec.seed_given = dec_seed->count() > 0;
    red.seed_given = red_seed->count() > 0;
    expt.seed_given = expt_seed->count() > 0;

    try {
        if (gen_cmd->parsed()) return run_gen(gen, out, err);
        if (test_cmd->parsed()) return run_test(test, out, err);
        if (est_cmd->parsed()) return run_estimate(est, out, err);
        if (harvest_cmd->parsed()) return run_harvest(harvest, out, err);
        if (dec_cmd->parsed()) return run_decompose(dec, out, err);
        if (red_cmd->parsed()) return run_reduce(red, out, err);
        if (dist_cmd->parsed()) return run_distance(dist, out);
        if (expt_cmd->parsed()) return run_experiment_cmd(expt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace bipwalk

// cpdetect: core-periphery detection on edge lists, synthetic graph
// generation, and the oracle/bench experiment harnesses.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cpdetect/bench.hpp"
#include "cpdetect/errors.hpp"
#include "cpdetect/format.hpp"
#include "cpdetect/graph.hpp"
#include "cpdetect/optimizer.hpp"
#include "cpdetect/oracle.hpp"

namespace {

constexpr const char* kToolVersion = "cpdetect 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // bad flags, parse errors, bad config
constexpr int kExitRefused = 2;    // degenerate graph or cost bound

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

struct DetectArgs {
    std::string input;
    std::uint64_t seed = 0;
    int restarts = 1;
    int threads = 1;
    bool full_recompute = false;
    std::string labels_out;
    std::string summary_out;
};

int cmd_detect(const DetectArgs& args) {
    std::ifstream in(args.input, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open input file: " << args.input << "\n";
        return kExitUsage;
    }

    cpdetect::EdgeListGraph loaded;
    try {
        loaded = cpdetect::load_edge_list(in);
    } catch (const cpdetect::ParseError& err) {
        std::cerr << "error: " << args.input << ": " << err.what() << "\n";
        return kExitUsage;
    }

    cpdetect::OptimizerConfig cfg;
    cfg.seed = args.seed;
    cfg.restarts = args.restarts;
    cfg.threads = args.threads;
    cfg.full_recompute = args.full_recompute;

    cpdetect::DetectionResult res;
    try {
        res = cpdetect::detect(loaded.graph, cfg);
    } catch (const cpdetect::DegenerateGraphError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRefused;
    }

    if (!args.labels_out.empty()) {
        auto out = open_output(args.labels_out);
        out << "original_node_id,label\n";
        for (std::size_t i = 0; i < loaded.node_ids.size(); ++i)
            out << loaded.node_ids[i] << ','
                << (res.labels.is_core[i] ? "core" : "periphery") << '\n';
    }

    if (!args.summary_out.empty()) {
        auto out = open_output(args.summary_out);
        out << "input=" << args.input << '\n'
            << "n=" << loaded.graph.n << '\n'
            << "m=" << loaded.graph.m << '\n'
            << "T=" << cpdetect::fmt_double(res.t) << '\n'
            << "k=" << res.k << '\n'
            << "passes=" << res.passes << '\n'
            << "restarts=" << args.restarts << '\n'
            << "seed=" << args.seed << '\n'
            << "converged=" << (res.converged ? "true" : "false") << '\n'
            << "wall_time_s=" << cpdetect::fmt_double(res.wall_time_s) << '\n'
            << "tool_version=" << kToolVersion << '\n';
    }

    // Table-1 style row: network, T, k, time.
    std::cout << args.input << "  n=" << loaded.graph.n << " m=" << loaded.graph.m
              << "  T=" << cpdetect::fmt_double(res.t) << "  k=" << res.k
              << "  passes=" << res.passes << "  time_s="
              << cpdetect::fmt_double(res.wall_time_s) << "\n";
    return kExitOk;
}

struct GenerateArgs {
    std::string model = "er";
    cpdetect::GeneratorSpec spec;
    std::string out;
    std::string truth_out;
};

int cmd_generate(GenerateArgs& args) {
    args.spec.model = cpdetect::parse_model(args.model);
    const cpdetect::GeneratedGraph gen = cpdetect::generate(args.spec);

    auto out = open_output(args.out);
    cpdetect::write_canonical(out, gen.graph);

    if (!args.truth_out.empty()) {
        auto truth = open_output(args.truth_out);
        truth << "original_node_id,label\n";
        for (std::size_t i = 0; i < gen.true_labels.size(); ++i)
            truth << i << ',' << (gen.true_labels.is_core[i] ? "core" : "periphery")
                  << '\n';
    }

    std::cout << "generated " << cpdetect::model_name(args.spec.model)
              << " graph: n=" << gen.graph.n << " m=" << gen.graph.m << " -> "
              << args.out << "\n";
    return kExitOk;
}

struct OracleArgs {
    std::int64_t n = 20;
    std::vector<double> p_grid;
    int replicates = 100;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
};

int cmd_oracle(const OracleArgs& args) {
    const std::vector<double> grid =
        args.p_grid.empty() ? cpdetect::default_ratio_grid() : args.p_grid;
    const auto rows =
        cpdetect::ratio_experiment(grid, args.replicates, args.n, args.seed, args.threads);
    if (args.out.empty()) {
        cpdetect::write_ratio_csv(std::cout, rows);
    } else {
        auto out = open_output(args.out);
        cpdetect::write_ratio_csv(out, rows);
    }
    return kExitOk;
}

struct BenchArgs {
    std::string config_path;
    std::string model = "sbm";
    std::string sweep = "p12";
    std::vector<double> grid;
    cpdetect::GeneratorSpec base;
    int replicates = 20;
    std::uint64_t seed = 0;
    int restarts = 1;
    int threads = 1;
    std::string out;
};

cpdetect::ExperimentConfig bench_config_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);

    cpdetect::ExperimentConfig cfg;
    cfg.model = cpdetect::parse_model(doc.at("model").get<std::string>());
    cfg.sweep = doc.at("sweep").get<std::string>();
    cfg.grid = doc.at("grid").get<std::vector<double>>();
    cfg.base.n = doc.value("n", std::int64_t{1000});
    cfg.base.p = doc.value("p", 0.0);
    cfg.base.p11 = doc.value("p11", 0.0);
    cfg.base.p12 = doc.value("p12", 0.0);
    cfg.base.p22 = doc.value("p22", 0.0);
    cfg.base.core_fraction = doc.value("core_fraction", 0.1);
    cfg.base.theta_low = doc.value("theta_low", 0.6);
    cfg.base.theta_high = doc.value("theta_high", 0.8);
    cfg.replicates = doc.value("replicates", 20);
    cfg.seed = doc.value("seed", std::uint64_t{0});
    cfg.restarts = doc.value("restarts", 1);
    cfg.threads = doc.value("threads", 1);
    return cfg;
}

int cmd_bench(const BenchArgs& args) {
    cpdetect::ExperimentConfig cfg;
    if (!args.config_path.empty()) {
        cfg = bench_config_from_json(args.config_path);
    } else {
        cfg.model = cpdetect::parse_model(args.model);
        cfg.sweep = args.sweep;
        cfg.grid = args.grid;
        cfg.base = args.base;
        cfg.replicates = args.replicates;
        cfg.seed = args.seed;
        cfg.restarts = args.restarts;
        cfg.threads = args.threads;
    }

    const auto rows = cpdetect::run_sweep(cfg);
    if (args.out.empty()) {
        cpdetect::write_sweep_csv(std::cout, cfg.sweep, rows);
    } else {
        auto out = open_output(args.out);
        cpdetect::write_sweep_csv(out, cfg.sweep, rows);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fast core-periphery detection via greedy label switching"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    DetectArgs detect_args;
    auto* detect = app.add_subcommand("detect", "Detect core-periphery labels in an edge-list file");
    detect->add_option("--input", detect_args.input, "edge-list file")->required();
    detect->add_option("--seed", detect_args.seed, "RNG seed (default 0)");
    detect->add_option("--restarts", detect_args.restarts, "independent restarts (default 1)")
        ->check(CLI::PositiveNumber);
    detect->add_option("--threads", detect_args.threads, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    detect->add_flag("--full-recompute", detect_args.full_recompute,
                     "reference mode: rescore every proposal from scratch");
    detect->add_option("--labels-out", detect_args.labels_out, "per-node labels CSV");
    detect->add_option("--summary-out", detect_args.summary_out, "key=value run summary");

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "Generate a synthetic graph (ER/SBM/DCBM)");
    generate->add_option("--model", gen_args.model, "er, sbm or dcbm")->required();
    generate->add_option("--n", gen_args.spec.n, "node count")->required();
    generate->add_option("--p", gen_args.spec.p, "ER edge probability");
    generate->add_option("--p11", gen_args.spec.p11, "core-core probability (default 2*p12)");
    generate->add_option("--p12", gen_args.spec.p12, "core-periphery probability");
    generate->add_option("--p22", gen_args.spec.p22, "periphery-periphery probability");
    generate->add_option("--core-frac", gen_args.spec.core_fraction,
                         "planted core fraction (default 0.1)");
    generate->add_option("--theta-low", gen_args.spec.theta_low, "DCBM weight lower bound");
    generate->add_option("--theta-high", gen_args.spec.theta_high, "DCBM weight upper bound");
    generate->add_option("--seed", gen_args.spec.seed, "RNG seed (default 0)");
    generate->add_option("--out", gen_args.out, "canonical edge-list output")->required();
    generate->add_option("--truth-out", gen_args.truth_out, "planted labels CSV");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand(
        "oracle", "Brute-force ratio experiment on ER graphs (n <= 24)");
    oracle->add_option("--n", oracle_args.n, "node count (default 20, max 24)");
    oracle->add_option("--p-grid", oracle_args.p_grid,
                       "edge probabilities (default 0.05 .. 0.95 step 0.05)")
        ->delimiter(',');
    oracle->add_option("--replicates", oracle_args.replicates, "MC replicates per p (default 100)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", oracle_args.seed, "RNG seed (default 0)");
    oracle->add_option("--threads", oracle_args.threads, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--out", oracle_args.out, "ratio CSV (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Monte-Carlo accuracy/runtime sweep");
    bench->add_option("--config", bench_args.config_path, "JSON experiment config");
    bench->add_option("--model", bench_args.model, "er, sbm or dcbm");
    bench->add_option("--sweep", bench_args.sweep, "swept parameter: p12, n or p");
    bench->add_option("--grid", bench_args.grid, "swept values")->delimiter(',');
    bench->add_option("--n", bench_args.base.n, "node count (fixed sweeps)");
    bench->add_option("--p", bench_args.base.p, "ER edge probability");
    bench->add_option("--p11", bench_args.base.p11, "core-core probability (default 2*p12)");
    bench->add_option("--p12", bench_args.base.p12, "core-periphery probability");
    bench->add_option("--p22", bench_args.base.p22, "periphery-periphery probability");
    bench->add_option("--core-frac", bench_args.base.core_fraction, "planted core fraction");
    bench->add_option("--theta-low", bench_args.base.theta_low, "DCBM weight lower bound");
    bench->add_option("--theta-high", bench_args.base.theta_high, "DCBM weight upper bound");
    bench->add_option("--replicates", bench_args.replicates, "MC replicates (default 20)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.seed, "RNG seed (default 0)");
    bench->add_option("--restarts", bench_args.restarts, "detect restarts (default 1)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_args.threads, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_args.out, "sweep CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (detect->parsed()) return cmd_detect(detect_args);
        if (generate->parsed()) return cmd_generate(gen_args);
        if (oracle->parsed()) return cmd_oracle(oracle_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const cpdetect::CostLimitError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRefused;
    } catch (const cpdetect::DegenerateGraphError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitRefused;
    } catch (const cpdetect::ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

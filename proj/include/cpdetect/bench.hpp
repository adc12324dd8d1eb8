#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpdetect/graph.hpp"
#include "cpdetect/labeling.hpp"
#include "cpdetect/optimizer.hpp"

namespace cpdetect {

// One-parameter Monte-Carlo sweep. Exactly one of "p12" / "n" / "p" is
// swept; `base` carries the fixed model parameters.
struct ExperimentConfig {
    Model model = Model::SBM;
    std::string sweep = "p12";
    std::vector<double> grid;
    GeneratorSpec base;
    int replicates = 20;
    std::uint64_t seed = 0;
    int restarts = 1;
    int threads = 1;
};

struct SweepRow {
    double swept_value = 0.0;
    std::optional<double> mean_accuracy;  // absent for ER (no planted truth)
    double mean_t = 0.0;
    double mean_time_s = 0.0;
    double mean_passes = 0.0;
    int replicate_count = 0;
    int failures = 0;
};

// Fraction of exact label matches; roles are not exchangeable, so no
// permutation alignment. Throws on length mismatch.
double accuracy(const Labeling& estimated, const Labeling& truth);

// Per grid value and replicate: generate, detect, record. Replicate r's
// graph depends only on (seed, grid value, r). Timed portion is detect()
// alone. Deterministic given the seed (timings excepted).
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

// CSV schema: swept_param, value, mean_accuracy, mean_T, mean_time_s,
// mean_passes, replicates. mean_accuracy is empty for ER rows.
void write_sweep_csv(std::ostream& out, const std::string& swept_param,
                     const std::vector<SweepRow>& rows);

struct ParsedSweepCsv {
    std::string swept_param;
    std::vector<SweepRow> rows;
};

ParsedSweepCsv read_sweep_csv(std::istream& in);

// Table-1 style single-network report.
struct ProfileReport {
    double t = 0.0;
    std::int64_t k = 0;
    double time_s = 0.0;
    std::int64_t passes = 0;
    bool converged = true;
};

ProfileReport profile_network(const Graph& g, const OptimizerConfig& cfg);

} // namespace cpdetect

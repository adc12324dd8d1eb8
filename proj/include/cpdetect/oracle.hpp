#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cpdetect/graph.hpp"
#include "cpdetect/labeling.hpp"

namespace cpdetect {

struct OracleResult {
    Labeling best_labels;
    double best_t = 0.0;
    std::uint64_t best_mask = 0;        // bit i set = node i in the core
    std::uint64_t evaluated = 0;        // labelings scored
    std::uint64_t skipped_degenerate = 0;
};

// Scores all 2^n labelings by walking the reflected Gray code, so each
// step is a single commit_flip. Degenerate labelings (k in {0, n-1, n})
// are skipped, never candidates. Ties break to the lowest bitmask.
// Throws CostLimitError when n > max_n and DegenerateGraphError when the
// graph itself is empty or complete.
OracleResult brute_force(const Graph& g, int max_n = 24);

struct RatioRow {
    double p = 0.0;
    double mean_ratio = 0.0;   // NaN when every replicate was excluded
    int excluded = 0;
};

// Fig.-1 style experiment: per (p, replicate), generate an ER graph, run
// single-restart detection and the brute-force oracle, and record
// T(detected) / T(global). Replicates with a degenerate graph or a
// non-positive global optimum are excluded and counted.
std::vector<RatioRow> ratio_experiment(const std::vector<double>& p_grid,
                                       int replicates, std::int64_t n,
                                       std::uint64_t seed, int threads = 1);

// Default grid 0.05, 0.10, ..., 0.95.
std::vector<double> default_ratio_grid();

// CSV columns: p, mean_ratio, n_excluded.
void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows);

// The 4-cycle fixture where the metric violates sub-modularity. The
// degenerate union labeling (k = n-1) is mapped to 0 here, and only here,
// to match the published sum.
struct SubmodularityReport {
    double t_s = 0.0;
    double t_t = 0.0;
    double t_union = 0.0;
    bool union_degenerate = false;
    double t_intersection = 0.0;
    double lhs = 0.0;   // t_s + t_t
    double rhs = 0.0;   // t_union + t_intersection
    bool violated = false;
};

SubmodularityReport submodularity_counterexample();

} // namespace cpdetect

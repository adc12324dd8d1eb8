#pragma once

#include <cstdint>

#include "cpdetect/graph.hpp"
#include "cpdetect/labeling.hpp"
#include "cpdetect/metric.hpp"

namespace cpdetect {

struct OptimizerConfig {
    std::uint64_t seed = 0;
    int restarts = 1;
    // Bernoulli start, redrawn while the core size is degenerate. Cores
    // are small in practice; balanced starts converge to worse optima on
    // sparse graphs, so keep this well below 0.5.
    double init_core_prob = 0.1;
    std::int64_t max_passes = 0;   // 0 = 10 * n
    int threads = 1;               // restarts run concurrently; results unchanged
    bool full_recompute = false;   // reference mode: score every proposal from scratch
};

// Converged labeling plus instrumentation for the winning restart.
// Cost units: an incremental proposal costs 1, an incremental commit
// costs deg(i); a full-recompute proposal costs n + 2m (one sweep over
// adjacency). update_cost = proposal_cost + commit_cost.
struct DetectionResult {
    Labeling labels;
    double t = 0.0;
    std::int64_t k = 0;
    std::int64_t passes = 0;
    std::int64_t proposals = 0;
    std::int64_t commits = 0;
    std::int64_t proposal_cost = 0;
    std::int64_t commit_cost = 0;
    std::int64_t update_cost = 0;
    double wall_time_s = 0.0;
    int restart_index = 0;
    bool converged = true;
};

// Greedy label-switching: per restart, Bernoulli-initialize, then sweep
// nodes in a fresh random order each pass, committing a flip iff it
// strictly increases T (degenerate proposals never accepted); stop when a
// full pass commits nothing. Best restart by T wins, ties to the lowest
// restart index. Deterministic function of (g, cfg) apart from wall time.
//
// Throws DegenerateGraphError when m == 0 or the graph is complete, and
// std::invalid_argument when n < 2 or cfg is out of range.
DetectionResult detect(const Graph& g, const OptimizerConfig& cfg);

// True iff no single-node flip strictly improves T (degenerate proposals
// do not count as improvements). Requires a non-degenerate labeling.
bool assert_local_optimum(const Graph& g, const Labeling& labels);

} // namespace cpdetect

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpdetect/graph.hpp"
#include "cpdetect/labeling.hpp"

namespace cpdetect {

// Borgatti-Everett correlation value. An empty optional marks the
// degenerate cases where the correlation denominator is zero: core size
// k in {0, n-1, n} or edge count m in {0, n(n-1)/2}. Degenerate values
// are never numbers and are treated as non-improving by the optimizer.
using TValue = std::optional<double>;

// State sufficient to evaluate T and single-flip deltas in O(1):
//   m_core  = number of edges with at least one core endpoint
//   k       = core size
//   core_neighbors[i] = number of core nodes adjacent to i
// plus the fixed graph constants n, m. All fields are exact integers;
// floating point enters only in the final correlation value.
struct MetricState {
    std::int64_t m_core = 0;
    std::int64_t k = 0;
    std::vector<std::int32_t> core_neighbors;
    std::int64_t n = 0;
    std::int64_t m = 0;

    bool operator==(const MetricState&) const = default;
};

// Mean of the ideal-pattern upper triangle:
// (k(k-1)/2 + k(n-k)) / (n(n-1)/2). Requires n >= 2, 0 <= k <= n.
double delta_bar(std::int64_t k, std::int64_t n);

// Correlation from the maintained counts alone; nullopt when degenerate.
TValue t_from_counts(std::int64_t m_core, std::int64_t k, std::int64_t n, std::int64_t m);

inline TValue t_score(const MetricState& s) {
    return t_from_counts(s.m_core, s.k, s.n, s.m);
}

// One sweep over adjacency: O(n + m). Requires n >= 2.
MetricState build_metric_state(const Graph& g, const Labeling& c);

struct Evaluation {
    TValue t;
    MetricState state;
};

Evaluation evaluate_full(const Graph& g, const Labeling& c);

// Objective after flipping node i, without mutating anything. O(1).
struct FlipProposal {
    TValue t_after;
    std::int64_t delta_m_core = 0;
};

FlipProposal propose_flip(const MetricState& s, const Graph& g, const Labeling& c,
                          NodeId i);

// Applies the flip: toggles c[i], adjusts k and m_core, and updates the
// core-neighbor count of every neighbor of i. O(deg(i)).
void commit_flip(MetricState& s, const Graph& g, Labeling& c, NodeId i);

} // namespace cpdetect

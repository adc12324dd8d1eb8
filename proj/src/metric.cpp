#include "cpdetect/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace cpdetect {

double delta_bar(std::int64_t k, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("delta_bar requires n >= 2");
    if (k < 0 || k > n) throw std::invalid_argument("delta_bar requires 0 <= k <= n");
    const std::int64_t ones = k * (k - 1) / 2 + k * (n - k);
    const std::int64_t pairs = n * (n - 1) / 2;
    return static_cast<double>(ones) / static_cast<double>(pairs);
}

TValue t_from_counts(std::int64_t m_core, std::int64_t k, std::int64_t n,
                     std::int64_t m) {
    const std::int64_t pairs = n * (n - 1) / 2;
    if (m == 0 || m == pairs) return std::nullopt;          // abar in {0,1}
    if (k == 0 || k >= n - 1) return std::nullopt;          // dbar in {0,1}

    // T = (M*P - m*D) / sqrt(m(P-m) * D(P-D)) with P = n(n-1)/2 and
    // D = k(k-1)/2 + k(n-k); same as the covariance-over-stddev form but
    // with exact integer products, so ideal structures give exactly 1
    // and zero covariance gives exactly 0.
    const std::int64_t ones = k * (k - 1) / 2 + k * (n - k);
    const double num = static_cast<double>(m_core) * static_cast<double>(pairs) -
                       static_cast<double>(m) * static_cast<double>(ones);
    const double rad = static_cast<double>(m) * static_cast<double>(pairs - m) *
                       static_cast<double>(ones) * static_cast<double>(pairs - ones);
    return num / std::sqrt(rad);
}

MetricState build_metric_state(const Graph& g, const Labeling& c) {
    if (g.n < 2) throw std::invalid_argument("metric requires n >= 2");
    if (static_cast<std::int64_t>(c.size()) != g.n)
        throw std::invalid_argument("labeling length does not match graph");

    MetricState s;
    s.n = g.n;
    s.m = g.m;
    s.k = c.core_size;
    s.core_neighbors.assign(static_cast<std::size_t>(g.n), 0);

    for (NodeId i = 0; i < static_cast<NodeId>(g.n); ++i) {
        std::int32_t count = 0;
        for (NodeId j : g.neighbors(i)) {
            count += c.is_core[j];
            if (j > i && (c.is_core[i] | c.is_core[j])) ++s.m_core;
        }
        s.core_neighbors[i] = count;
    }
    return s;
}

Evaluation evaluate_full(const Graph& g, const Labeling& c) {
    MetricState s = build_metric_state(g, c);
    TValue t = t_score(s);
    return {t, std::move(s)};
}

FlipProposal propose_flip(const MetricState& s, const Graph& g, const Labeling& c,
                          NodeId i) {
    if (static_cast<std::int64_t>(i) >= g.n)
        throw std::invalid_argument("node index out of range");

    // Flipping i changes A_ij * Delta_ij only for neighbors j with
    // c_j = 0: those pairs enter (leave) the count when i enters (leaves)
    // the core. Neighbors already in the core contribute either way.
    const std::int64_t periphery_neighbors =
        g.degree(i) - static_cast<std::int64_t>(s.core_neighbors[i]);
    const std::int64_t delta = c.is_core[i] ? -periphery_neighbors : periphery_neighbors;
    const std::int64_t k_after = s.k + (c.is_core[i] ? -1 : 1);

    return {t_from_counts(s.m_core + delta, k_after, s.n, s.m), delta};
}

void commit_flip(MetricState& s, const Graph& g, Labeling& c, NodeId i) {
    const FlipProposal prop = propose_flip(s, g, c, i);
    s.m_core += prop.delta_m_core;
    c.flip(i);
    s.k = c.core_size;
    const std::int32_t step = c.is_core[i] ? 1 : -1;
    for (NodeId j : g.neighbors(i)) s.core_neighbors[j] += step;
}

} // namespace cpdetect

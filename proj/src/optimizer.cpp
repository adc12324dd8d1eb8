#include "cpdetect/optimizer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cpdetect/errors.hpp"
#include "cpdetect/rng.hpp"

namespace cpdetect {

namespace {

bool degenerate_core_size(std::int64_t k, std::int64_t n) {
    return k == 0 || k >= n - 1;
}

DetectionResult run_restart(const Graph& g, const OptimizerConfig& cfg, int restart) {
    const std::int64_t n = g.n;
    const std::int64_t max_passes = cfg.max_passes > 0 ? cfg.max_passes : 10 * n;
    Xoshiro256ss rng(seed_mix(cfg.seed, static_cast<std::uint64_t>(restart)));

    Labeling labels;
    do {
        std::vector<std::uint8_t> init(static_cast<std::size_t>(n));
        for (auto& v : init) v = rng.next_double() < cfg.init_core_prob ? 1 : 0;
        labels = Labeling(std::move(init));
    } while (degenerate_core_size(labels.core_size, n));

    MetricState state = build_metric_state(g, labels);
    TValue t = t_score(state);
    assert(t.has_value());  // non-degenerate start on a non-degenerate graph

    DetectionResult res;
    res.restart_index = restart;

    const std::int64_t full_eval_cost = n + 2 * g.m;
    std::vector<NodeId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);

    bool improved = true;
    while (improved) {
        if (res.passes == max_passes) {
            res.converged = false;
            break;
        }
        ++res.passes;
        improved = false;
        fisher_yates(order.data(), order.size(), rng);
        for (NodeId i : order) {
            ++res.proposals;
            TValue t_after;
            if (cfg.full_recompute) {
                labels.flip(i);
                t_after = t_score(build_metric_state(g, labels));
                labels.flip(i);
                res.proposal_cost += full_eval_cost;
            } else {
                t_after = propose_flip(state, g, labels, i).t_after;
                res.proposal_cost += 1;
            }
            if (t_after.has_value() && *t_after > *t) {
                if (cfg.full_recompute) {
                    labels.flip(i);
                    state = build_metric_state(g, labels);
                } else {
                    res.commit_cost += g.degree(i);
                    commit_flip(state, g, labels, i);
                }
                t = t_after;
                ++res.commits;
                improved = true;
            }
        }
    }

    res.labels = std::move(labels);
    res.t = *t;
    res.k = state.k;
    res.update_cost = res.proposal_cost + res.commit_cost;
    return res;
}

} // namespace

DetectionResult detect(const Graph& g, const OptimizerConfig& cfg) {
    if (g.n < 2) throw std::invalid_argument("detect requires n >= 2");
    if (g.has_degenerate_density())
        throw DegenerateGraphError("metric undefined for empty/complete graph");
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (!(cfg.init_core_prob > 0.0 && cfg.init_core_prob < 1.0))
        throw std::invalid_argument("init_core_prob must lie in (0,1)");

    const auto start = std::chrono::steady_clock::now();

    std::vector<DetectionResult> outcomes(static_cast<std::size_t>(cfg.restarts));
    auto run_range = [&](int begin, int end, int stride) {
        for (int r = begin; r < end; r += stride)
            outcomes[static_cast<std::size_t>(r)] = run_restart(g, cfg, r);
    };

    const int workers = std::min(cfg.threads, cfg.restarts);
    if (workers <= 1) {
        run_range(0, cfg.restarts, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_range, w, cfg.restarts, workers);
        for (auto& th : pool) th.join();
    }

    // Max by T; ties go to the lowest restart index (scan order).
    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].t > outcomes[best].t) best = r;
    }

    DetectionResult res = std::move(outcomes[best]);
    res.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    assert(!res.converged || assert_local_optimum(g, res.labels));
    return res;
}

bool assert_local_optimum(const Graph& g, const Labeling& labels) {
    if (degenerate_core_size(labels.core_size, g.n) || g.has_degenerate_density())
        throw std::invalid_argument("assert_local_optimum requires a non-degenerate labeling");

    const Evaluation eval = evaluate_full(g, labels);
    for (NodeId i = 0; i < static_cast<NodeId>(g.n); ++i) {
        const TValue t_after = propose_flip(eval.state, g, labels, i).t_after;
        if (t_after.has_value() && *t_after > *eval.t) return false;
    }
    return true;
}

} // namespace cpdetect

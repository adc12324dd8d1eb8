#include "cpdetect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cpdetect/errors.hpp"
#include "cpdetect/format.hpp"
#include "cpdetect/metric.hpp"
#include "cpdetect/optimizer.hpp"
#include "cpdetect/rng.hpp"

namespace cpdetect {

OracleResult brute_force(const Graph& g, int max_n) {
    if (g.n > max_n)
        throw CostLimitError("brute force refused: n = " + std::to_string(g.n) +
                             " exceeds the 2^n cost bound (max " +
                             std::to_string(max_n) + ")");
    if (g.has_degenerate_density())
        throw DegenerateGraphError("metric undefined for empty/complete graph");

    const int n = static_cast<int>(g.n);
    Labeling labels = Labeling::all_periphery(static_cast<std::size_t>(n));
    MetricState state = build_metric_state(g, labels);

    OracleResult res;
    res.best_t = -std::numeric_limits<double>::infinity();
    res.best_mask = ~std::uint64_t{0};

    auto consider = [&](std::uint64_t mask) {
        const TValue t = t_score(state);
        if (!t.has_value()) {
            ++res.skipped_degenerate;
            return;
        }
        ++res.evaluated;
        if (*t > res.best_t || (*t == res.best_t && mask < res.best_mask)) {
            res.best_t = *t;
            res.best_mask = mask;
        }
    };

    consider(0);  // all-periphery start (always degenerate)
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const NodeId flipped = static_cast<NodeId>(std::countr_zero(step));
        commit_flip(state, g, labels, flipped);
        consider(step ^ (step >> 1));  // Gray code of the current labeling
    }

    res.best_labels = Labeling::all_periphery(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (res.best_mask >> i & 1) res.best_labels.flip(static_cast<std::size_t>(i));
    }
    return res;
}

namespace {

constexpr std::uint64_t kDetectStream = 0x6cb1f2d3a5e77e01ULL;

std::uint64_t value_bits(double v) {
    return std::bit_cast<std::uint64_t>(v);
}

} // namespace

std::vector<RatioRow> ratio_experiment(const std::vector<double>& p_grid,
                                       int replicates, std::int64_t n,
                                       std::uint64_t seed, int threads) {
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    if (n < 2) throw std::invalid_argument("ratio experiment requires n >= 2");
    if (n > 24)
        throw CostLimitError("ratio experiment refused: n = " + std::to_string(n) +
                             " exceeds the 2^n cost bound (max 24)");
    for (double p : p_grid) {
        GeneratorSpec probe;
        probe.model = Model::ER;
        probe.n = n;
        probe.p = p;
        validate(probe);  // reject bad grid values before any thread starts
    }

    std::vector<RatioRow> rows(p_grid.size());
    for (std::size_t gi = 0; gi < p_grid.size(); ++gi) {
        const double p = p_grid[gi];
        // ratio or NaN-excluded marker, one slot per replicate
        std::vector<double> ratio(static_cast<std::size_t>(replicates));

        auto run_range = [&](int begin, int stride) {
            for (int r = begin; r < replicates; r += stride) {
                const std::uint64_t graph_seed = seed_mix(seed, value_bits(p),
                                                          static_cast<std::uint64_t>(r));
                GeneratorSpec spec;
                spec.model = Model::ER;
                spec.n = n;
                spec.p = p;
                spec.seed = graph_seed;
                const GeneratedGraph gen = generate(spec);

                double out = std::numeric_limits<double>::quiet_NaN();
                if (!gen.graph.has_degenerate_density()) {
                    OptimizerConfig cfg;
                    cfg.seed = seed_mix(graph_seed, kDetectStream);
                    cfg.restarts = 1;
                    const DetectionResult det = detect(gen.graph, cfg);
                    const OracleResult oracle = brute_force(gen.graph);
                    if (oracle.best_t > 0.0) out = det.t / oracle.best_t;
                }
                ratio[static_cast<std::size_t>(r)] = out;
            }
        };

        const int workers = std::min(threads, replicates);
        if (workers <= 1) {
            run_range(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w, workers);
            for (auto& th : pool) th.join();
        }

        RatioRow& row = rows[gi];
        row.p = p;
        double sum = 0.0;
        int included = 0;
        for (double v : ratio) {
            if (std::isnan(v)) {
                ++row.excluded;
            } else {
                sum += v;
                ++included;
            }
        }
        row.mean_ratio = included > 0 ? sum / included
                                      : std::numeric_limits<double>::quiet_NaN();
    }
    return rows;
}

std::vector<double> default_ratio_grid() {
    std::vector<double> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(static_cast<double>(i) * 0.05);
    return grid;
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows) {
    out << "p,mean_ratio,n_excluded\n";
    for (const RatioRow& row : rows) {
        out << fmt_double(row.p) << ',' << fmt_double(row.mean_ratio) << ','
            << row.excluded << '\n';
    }
}

SubmodularityReport submodularity_counterexample() {
    // 4-cycle 0-1-2-3-0; S = {1,2}, T = {2,3} (the paper's nodes {2,3} and
    // {3,4}, shifted to 0-based).
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});

    auto label_set = [](std::initializer_list<std::size_t> core) {
        Labeling c = Labeling::all_periphery(4);
        for (std::size_t i : core) c.flip(i);
        return c;
    };

    const TValue t_s = evaluate_full(g, label_set({1, 2})).t;
    const TValue t_t = evaluate_full(g, label_set({2, 3})).t;
    const TValue t_union = evaluate_full(g, label_set({1, 2, 3})).t;
    const TValue t_inter = evaluate_full(g, label_set({2})).t;

    SubmodularityReport rep;
    rep.t_s = *t_s;
    rep.t_t = *t_t;
    rep.union_degenerate = !t_union.has_value();
    rep.t_union = t_union.value_or(0.0);  // degenerate -> 0, this fixture only
    rep.t_intersection = *t_inter;
    rep.lhs = rep.t_s + rep.t_t;
    rep.rhs = rep.t_union + rep.t_intersection;
    rep.violated = rep.lhs < rep.rhs;

    if (!rep.union_degenerate || std::abs(rep.lhs + 0.63) > 5e-3 || rep.rhs != 0.0)
        throw std::logic_error("sub-modularity fixture produced unexpected values");
    return rep;
}

} // namespace cpdetect

#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "cpdetect/metric.hpp"
#include "cpdetect/rng.hpp"
#include "helpers.hpp"

using namespace cpdetect;
using testutil::label_from_bits;
using testutil::label_from_mask;

namespace {

// -1/sqrt(10), the 4-cycle value derived by enumerating its 6 pairs.
constexpr double kFourCycleT = -0.31622776601683794;

} // namespace

TEST_CASE("delta_bar closed form") {
    CHECK(delta_bar(0, 10) == 0.0);
    CHECK(delta_bar(10, 10) == 1.0);
    CHECK(delta_bar(1, 4) == 0.5);        // (0 + 1*3) / 6
    CHECK(delta_bar(3, 4) == 1.0);        // already 1 at k = n-1
    CHECK(delta_bar(2, 4) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK_THROWS(delta_bar(2, 1));
    CHECK_THROWS(delta_bar(5, 4));
}

TEST_CASE("evaluate_full on the 4-cycle fixture") {
    const Graph g = testutil::make_four_cycle();

    SUBCASE("c = (0,1,1,0)") {
        const auto eval = evaluate_full(g, label_from_bits({0, 1, 1, 0}));
        REQUIRE(eval.t.has_value());
        CHECK(*eval.t == doctest::Approx(kFourCycleT).epsilon(1e-14));
        CHECK(eval.state.m_core == 3);
        CHECK(eval.state.k == 2);
    }
    SUBCASE("c = (0,0,1,0) gives exactly zero") {
        const auto eval = evaluate_full(g, label_from_bits({0, 0, 1, 0}));
        REQUIRE(eval.t.has_value());
        CHECK(*eval.t == 0.0);
        CHECK(eval.state.m_core == 2);
    }
    SUBCASE("c = (0,1,1,1) is degenerate: k = n-1") {
        const auto eval = evaluate_full(g, label_from_bits({0, 1, 1, 1}));
        CHECK(!eval.t.has_value());
    }
}

TEST_CASE("star with core center is the ideal pattern: T = 1 exactly") {
    const Graph g = testutil::make_star(4);
    Labeling c = Labeling::all_periphery(4);
    c.flip(0);
    const auto eval = evaluate_full(g, c);
    REQUIRE(eval.t.has_value());
    CHECK(*eval.t == 1.0);
}

TEST_CASE("propose_flip matches full recomputation on the 4-cycle") {
    const Graph g = testutil::make_four_cycle();
    Labeling c = label_from_bits({0, 0, 1, 0});
    const auto eval = evaluate_full(g, c);

    // flip node 1 into the core: deltaM = deg - coreDeg = 2 - 1
    const auto prop = propose_flip(eval.state, g, c, 1);
    CHECK(prop.delta_m_core == 1);
    REQUIRE(prop.t_after.has_value());
    const auto direct = evaluate_full(g, label_from_bits({0, 1, 1, 0}));
    CHECK(*prop.t_after == *direct.t);
    CHECK(*prop.t_after == doctest::Approx(kFourCycleT).epsilon(1e-14));
}

TEST_CASE("propose_flip degenerate outcomes") {
    SUBCASE("flipping the last periphery node makes k = n") {
        const Graph g = testutil::make_four_cycle();
        Labeling c = label_from_bits({1, 1, 1, 0});  // k = 3 = n-1
        const auto state = build_metric_state(g, c);
        const auto prop = propose_flip(state, g, c, 3);
        CHECK(!prop.t_after.has_value());
    }
    SUBCASE("empty graph: every value degenerate") {
        const Graph g = Graph::from_edges(5, {});
        Labeling c = label_from_bits({1, 1, 0, 0, 0});
        const auto eval = evaluate_full(g, c);
        CHECK(!eval.t.has_value());
        const auto prop = propose_flip(eval.state, g, c, 4);
        CHECK(!prop.t_after.has_value());
    }
    SUBCASE("out-of-range node is a usage error") {
        const Graph g = testutil::make_four_cycle();
        Labeling c = label_from_bits({0, 1, 1, 0});
        const auto state = build_metric_state(g, c);
        CHECK_THROWS_AS(propose_flip(state, g, c, 4), std::invalid_argument);
    }
}

TEST_CASE("commit_flip keeps state equal to a fresh evaluation") {
    const Graph g = testutil::make_four_cycle();
    Labeling c = label_from_bits({0, 0, 1, 0});
    auto state = build_metric_state(g, c);
    const auto before = state;

    commit_flip(state, g, c, 1);
    CHECK(state.core_neighbors[0] == before.core_neighbors[0] + 1);
    CHECK(state.core_neighbors[2] == before.core_neighbors[2] + 1);
    CHECK(state.m_core == 3);
    CHECK(state == build_metric_state(g, c));

    // involution: flipping the same node twice restores everything
    commit_flip(state, g, c, 1);
    CHECK(state == before);
    CHECK(c == label_from_bits({0, 0, 1, 0}));
}

TEST_CASE("incremental and full evaluation agree over long flip sequences"
          * doctest::timeout(120)) {
    // Random graphs up to n = 200, 500+ committed flips each, exact state
    // equality after every commit.
    Xoshiro256ss rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        const std::int64_t n = 20 + static_cast<std::int64_t>(rng.next_below(181));
        const double p = 0.05 + 0.3 * rng.next_double();
        const Graph g = testutil::random_er(n, p, rng.next());
        Labeling c = label_from_mask(rng.next() | 1, static_cast<std::size_t>(n));

        auto state = build_metric_state(g, c);
        for (int step = 0; step < 520; ++step) {
            const NodeId i = static_cast<NodeId>(rng.next_below(static_cast<std::uint64_t>(n)));
            const auto prop = propose_flip(state, g, c, i);
            commit_flip(state, g, c, i);

            const auto fresh = evaluate_full(g, c);
            REQUIRE(state == fresh.state);  // integer fields exact
            const auto t_inc = t_score(state);
            REQUIRE(t_inc.has_value() == fresh.t.has_value());
            REQUIRE(prop.t_after.has_value() == fresh.t.has_value());
            if (fresh.t.has_value()) {
                CHECK(*t_inc == doctest::Approx(*fresh.t).epsilon(1e-12));
                CHECK(*prop.t_after == *fresh.t);
            }
        }
    }
}

TEST_CASE("closed form equals the direct Pearson correlation" * doctest::timeout(120)) {
    // >= 100 random non-degenerate (graph, labeling) pairs vs the
    // upper-triangle Pearson oracle.
    Xoshiro256ss rng(77);
    int checked = 0;
    while (checked < 110) {
        const std::int64_t n = 5 + static_cast<std::int64_t>(rng.next_below(60));
        const double p = 0.1 + 0.6 * rng.next_double();
        const Graph g = testutil::random_er(n, p, rng.next());
        const Labeling c = label_from_mask(rng.next(), static_cast<std::size_t>(n));

        const auto eval = evaluate_full(g, c);
        const auto direct = testutil::pearson_t(g, c);
        REQUIRE(eval.t.has_value() == direct.has_value());
        if (!eval.t.has_value()) continue;
        CHECK(*eval.t == doctest::Approx(*direct).epsilon(1e-12));
        ++checked;
    }
}

TEST_CASE("T is invariant under node relabeling") {
    Xoshiro256ss rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t n = 8 + static_cast<std::int64_t>(rng.next_below(40));
        const Graph g = testutil::random_er(n, 0.3, rng.next());
        const Labeling c = label_from_mask(rng.next(), static_cast<std::size_t>(n));

        std::vector<NodeId> perm(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<NodeId>(i);
        fisher_yates(perm.data(), perm.size(), rng);

        std::vector<Edge> edges;
        for (NodeId i = 0; i < static_cast<NodeId>(n); ++i)
            for (NodeId j : g.neighbors(i))
                if (j > i) edges.push_back({perm[i], perm[j]});
        const Graph gp = Graph::from_edges(n, std::move(edges));
        std::vector<std::uint8_t> cp(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cp.size(); ++i) cp[perm[i]] = c.is_core[i];

        const auto t0 = evaluate_full(g, c).t;
        const auto t1 = evaluate_full(gp, Labeling(std::move(cp))).t;
        REQUIRE(t0.has_value() == t1.has_value());
        if (t0.has_value()) CHECK(*t0 == *t1);  // bitwise: same integer counts
    }
}

TEST_CASE("degeneracy holds exactly when k in {0, n-1, n} or m in {0, all}") {
    for (std::int64_t n = 2; n <= 6; ++n) {
        std::vector<Graph> graphs;
        graphs.push_back(Graph::from_edges(n, {}));  // empty
        std::vector<Edge> complete;
        for (NodeId i = 0; i < static_cast<NodeId>(n); ++i)
            for (NodeId j = i + 1; j < static_cast<NodeId>(n); ++j)
                complete.push_back({i, j});
        graphs.push_back(Graph::from_edges(n, complete));
        if (n >= 3) {
            std::vector<Edge> path;
            for (NodeId i = 0; i + 1 < static_cast<NodeId>(n); ++i) path.push_back({i, i + 1});
            graphs.push_back(Graph::from_edges(n, path));
        }
        graphs.push_back(testutil::random_er(n, 0.5, 99 + static_cast<std::uint64_t>(n)));

        for (const Graph& g : graphs) {
            const bool density_degenerate = g.has_degenerate_density();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const Labeling c = label_from_mask(mask, static_cast<std::size_t>(n));
                const bool expect_degenerate = density_degenerate || c.core_size == 0 ||
                                               c.core_size >= n - 1;
                const auto eval = evaluate_full(g, c);
                CHECK(eval.t.has_value() == !expect_degenerate);
            }
        }
    }
}

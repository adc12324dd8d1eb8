#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "cpdetect/graph.hpp"
#include "cpdetect/labeling.hpp"

namespace testutil {

using cpdetect::Graph;
using cpdetect::Labeling;

// Independent oracle: Pearson correlation of the two n(n-1)/2 upper
// triangle vectors, computed directly from their definition. Kept free of
// any code path shared with the production metric.
inline std::optional<double> pearson_t(const Graph& g, const Labeling& c) {
    const std::int64_t n = g.n;
    std::vector<double> a, d;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            bool edge = false;
            for (cpdetect::NodeId t : g.neighbors(static_cast<cpdetect::NodeId>(i)))
                if (t == static_cast<cpdetect::NodeId>(j)) edge = true;
            a.push_back(edge ? 1.0 : 0.0);
            d.push_back(c.is_core[static_cast<std::size_t>(i)] ||
                                c.is_core[static_cast<std::size_t>(j)]
                            ? 1.0
                            : 0.0);
        }
    }
    const double count = static_cast<double>(a.size());
    double mean_a = 0.0, mean_d = 0.0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        mean_a += a[p];
        mean_d += d[p];
    }
    mean_a /= count;
    mean_d /= count;
    double cov = 0.0, var_a = 0.0, var_d = 0.0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        cov += (a[p] - mean_a) * (d[p] - mean_d);
        var_a += (a[p] - mean_a) * (a[p] - mean_a);
        var_d += (d[p] - mean_d) * (d[p] - mean_d);
    }
    if (var_a == 0.0 || var_d == 0.0) return std::nullopt;
    return cov / std::sqrt(var_a * var_d);
}

// Center node 0 plus n-1 leaves.
inline Graph make_star(std::int64_t n) {
    std::vector<cpdetect::Edge> edges;
    for (cpdetect::NodeId leaf = 1; leaf < static_cast<cpdetect::NodeId>(n); ++leaf)
        edges.push_back({0, leaf});
    return Graph::from_edges(n, std::move(edges));
}

// The counterexample fixture: 0-1-2-3-0.
inline Graph make_four_cycle() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Labeling label_from_bits(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> v;
    for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
    return Labeling(std::move(v));
}

inline Labeling label_from_mask(std::uint64_t mask, std::size_t n) {
    std::vector<std::uint8_t> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    return Labeling(std::move(v));
}

inline Graph random_er(std::int64_t n, double p, std::uint64_t seed) {
    cpdetect::GeneratorSpec spec;
    spec.model = cpdetect::Model::ER;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    return cpdetect::generate(spec).graph;
}

} // namespace testutil

#include "cpdetect/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "cpdetect/errors.hpp"
#include "cpdetect/rng.hpp"

namespace cpdetect {

Graph Graph::from_edges(std::int64_t n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });

    Graph g;
    g.n = n;
    g.m = static_cast<std::int64_t>(edges.size());
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets[u + 1];
        ++g.offsets[v + 1];
    }
    for (std::int64_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];

    g.targets.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& [u, v] : edges) {
        g.targets[cursor[u]++] = v;
        g.targets[cursor[v]++] = u;
    }
    // keep each neighbor list strictly increasing
    for (NodeId i = 0; i < static_cast<NodeId>(n); ++i) {
        std::sort(g.targets.begin() + g.offsets[i], g.targets.begin() + g.offsets[i + 1]);
    }
    return g;
}

std::string model_name(Model model) {
    switch (model) {
        case Model::ER: return "er";
        case Model::SBM: return "sbm";
        case Model::DCBM: return "dcbm";
    }
    return "?";
}

Model parse_model(const std::string& name) {
    if (name == "er") return Model::ER;
    if (name == "sbm") return Model::SBM;
    if (name == "dcbm") return Model::DCBM;
    throw ConfigError("unknown model '" + name + "' (expected er, sbm or dcbm)");
}

GeneratorSpec GeneratorSpec::resolved() const {
    GeneratorSpec r = *this;
    if (r.model != Model::ER && r.p11 == 0.0) r.p11 = 2.0 * r.p12;
    return r;
}

std::int64_t GeneratorSpec::planted_core_size() const {
    return std::llround(core_fraction * static_cast<double>(n));
}

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

} // namespace

void validate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ConfigError("n must be >= 1");
    if (spec.model == Model::ER) {
        if (!is_probability(spec.p)) throw ConfigError("p must lie in [0,1]");
        return;
    }
    if (!is_probability(spec.p11)) throw ConfigError("p11 must lie in [0,1]");
    if (!is_probability(spec.p12)) throw ConfigError("p12 must lie in [0,1]");
    if (!is_probability(spec.p22)) throw ConfigError("p22 must lie in [0,1]");
    if (!(spec.p11 >= spec.p12 && spec.p12 >= spec.p22))
        throw ConfigError("block probabilities must satisfy p11 >= p12 >= p22");
    if (!(spec.core_fraction > 0.0 && spec.core_fraction < 1.0))
        throw ConfigError("core_fraction must lie in (0,1)");
    if (spec.model == Model::DCBM) {
        if (!(spec.theta_low > 0.0 && spec.theta_low <= spec.theta_high))
            throw ConfigError("theta bounds must satisfy 0 < theta_low <= theta_high");
        const double scaled = spec.theta_high * spec.theta_high * spec.p11;
        if (scaled > 1.0)
            throw ConfigError("theta_high^2 * p11 exceeds 1; edge probability invalid");
    }
}

GeneratedGraph generate(const GeneratorSpec& raw) {
    const GeneratorSpec spec = raw.resolved();
    validate(spec);

    const std::int64_t n = spec.n;
    Xoshiro256ss rng(spec.seed);

    std::int64_t core_size = 0;
    std::vector<double> theta;
    if (spec.model != Model::ER) {
        core_size = spec.planted_core_size();
    }
    if (spec.model == Model::DCBM) {
        theta.resize(static_cast<std::size_t>(n));
        const double width = spec.theta_high - spec.theta_low;
        for (auto& t : theta) t = spec.theta_low + width * rng.next_double();
    }

    // Core nodes occupy indices 0..k-1.
    auto block_prob = [&](std::int64_t i, std::int64_t j) {
        const bool ci = i < core_size, cj = j < core_size;
        if (ci && cj) return spec.p11;
        if (ci || cj) return spec.p12;
        return spec.p22;
    };

    std::vector<Edge> edges;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            double pij;
            switch (spec.model) {
                case Model::ER: pij = spec.p; break;
                case Model::SBM: pij = block_prob(i, j); break;
                case Model::DCBM:
                default:
                    pij = theta[i] * theta[j] * block_prob(i, j);
                    break;
            }
            if (rng.next_double() < pij)
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }

    GeneratedGraph out;
    out.graph = Graph::from_edges(n, std::move(edges));
    out.true_labels = Labeling::all_periphery(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < core_size; ++i) out.true_labels.flip(static_cast<std::size_t>(i));
    out.theta = std::move(theta);
    return out;
}

EdgeListGraph load_edge_list(std::istream& in) {
    EdgeListGraph out;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;

    auto index_of = [&](const std::string& id) {
        auto [it, inserted] = out.id_to_index.try_emplace(
            id, static_cast<NodeId>(out.node_ids.size()));
        if (inserted) out.node_ids.push_back(id);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string a, b;
        if (!(tokens >> a)) continue;               // blank line
        if (a[0] == '#' || a[0] == '%') continue;   // comment
        if (!(tokens >> b))
            throw ParseError(line_no, "expected two node identifiers, got one token");
        const NodeId u = index_of(a);
        const NodeId v = index_of(b);
        if (u != v) edges.emplace_back(u, v);
        // remaining tokens (weights, timestamps, ...) are ignored
    }

    if (out.node_ids.empty())
        throw ParseError(line_no, "empty input: no edges found (n=0 graph rejected)");

    out.graph = Graph::from_edges(static_cast<std::int64_t>(out.node_ids.size()),
                                  std::move(edges));
    return out;
}

void write_canonical(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.m << '\n';
    for (NodeId i = 0; i < static_cast<NodeId>(g.n); ++i) {
        for (NodeId j : g.neighbors(i)) {
            if (j > i) out << i << ' ' << j << '\n';
        }
    }
}

} // namespace cpdetect

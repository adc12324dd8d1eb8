#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpdetect/labeling.hpp"

namespace cpdetect {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Undirected simple graph in CSR form. Neighbor lists are strictly
// increasing; adjacency is symmetric; no self-loops or parallel edges.
struct Graph {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> offsets;  // size n+1
    std::vector<NodeId> targets;        // size 2m

    // Builds from an arbitrary edge list: self-loops are dropped and
    // duplicates (in either orientation) collapse to one undirected edge.
    static Graph from_edges(std::int64_t n, std::vector<Edge> edges);

    std::span<const NodeId> neighbors(NodeId i) const {
        return {targets.data() + offsets[i],
                static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
    }

    std::int64_t degree(NodeId i) const { return offsets[i + 1] - offsets[i]; }

    std::int64_t pair_count() const { return n * (n - 1) / 2; }

    bool has_degenerate_density() const { return m == 0 || m == pair_count(); }
};

enum class Model { ER, SBM, DCBM };

std::string model_name(Model model);
Model parse_model(const std::string& name);

// Parameters for the three generators. For SBM/DCBM, p11 == 0 means
// "derive as 2 * p12"; resolve() applies that default.
struct GeneratorSpec {
    Model model = Model::ER;
    std::int64_t n = 0;
    double p = 0.0;                 // ER edge probability
    double p11 = 0.0, p12 = 0.0, p22 = 0.0;
    double core_fraction = 0.1;
    double theta_low = 0.6, theta_high = 0.8;
    std::uint64_t seed = 0;

    GeneratorSpec resolved() const;

    // Planted core size: round(core_fraction * n), half away from zero.
    std::int64_t planted_core_size() const;
};

// Throws ConfigError naming the offending parameter(s).
void validate(const GeneratorSpec& spec);

struct GeneratedGraph {
    Graph graph;
    Labeling true_labels;       // all-periphery for ER
    std::vector<double> theta;  // DCBM degree weights; empty otherwise
};

// Draws each unordered pair {i,j} independently with the model's edge
// probability. Deterministic function of spec (including seed): theta
// weights (DCBM only) are drawn first, then pairs in (i,j) ascending order.
GeneratedGraph generate(const GeneratorSpec& spec);

// Edge-list ingestion. Node identifiers are arbitrary strings, indexed in
// first-appearance order.
struct EdgeListGraph {
    Graph graph;
    std::vector<std::string> node_ids;                     // index -> id
    std::unordered_map<std::string, NodeId> id_to_index;   // id -> index
};

// Cleaning rules: split lines on whitespace; skip empty lines and lines
// starting with '#' or '%'; first two tokens are endpoints, the rest
// (weights, timestamps) are discarded; self-loops dropped; duplicate and
// reversed-duplicate edges collapsed. Throws ParseError on a one-token
// line and on empty input (an n=0 graph is rejected).
EdgeListGraph load_edge_list(std::istream& in);

// Canonical text form: header "n m", then one "i j" line per edge with
// i < j, pairs ascending. Equal graphs serialize byte-for-byte equal.
void write_canonical(std::ostream& out, const Graph& g);

} // namespace cpdetect

#include "cpdetect/bench.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cpdetect/errors.hpp"
#include "cpdetect/format.hpp"
#include "cpdetect/rng.hpp"

namespace cpdetect {

double accuracy(const Labeling& estimated, const Labeling& truth) {
    if (estimated.size() != truth.size())
        throw std::invalid_argument("accuracy: labelings have different lengths");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        matches += estimated.is_core[i] == truth.is_core[i];
    return static_cast<double>(matches) / static_cast<double>(truth.size());
}

namespace {

constexpr std::uint64_t kDetectStream = 0x2b7e151628aed2a6ULL;

GeneratorSpec apply_sweep(const ExperimentConfig& cfg, double value) {
    GeneratorSpec spec = cfg.base;
    spec.model = cfg.model;
    if (cfg.sweep == "p12") {
        if (cfg.model == Model::ER) throw ConfigError("ER has no p12 to sweep");
        spec.p12 = value;
        spec.p11 = 0.0;  // re-derive as 2 * p12
    } else if (cfg.sweep == "n") {
        spec.n = static_cast<std::int64_t>(value);
    } else if (cfg.sweep == "p") {
        if (cfg.model != Model::ER) throw ConfigError("only ER sweeps p");
        spec.p = value;
    } else {
        throw ConfigError("unknown sweep parameter '" + cfg.sweep +
                          "' (expected p12, n or p)");
    }
    return spec;
}

struct ReplicateOutcome {
    bool failed = false;
    double accuracy = 0.0;
    double t = 0.0;
    double time_s = 0.0;
    double passes = 0.0;
};

} // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
    if (cfg.replicates < 1) throw ConfigError("replicates must be >= 1");
    if (cfg.restarts < 1) throw ConfigError("restarts must be >= 1");
    if (cfg.grid.empty()) throw ConfigError("sweep grid is empty");

    std::vector<SweepRow> rows;
    rows.reserve(cfg.grid.size());

    for (double value : cfg.grid) {
        const GeneratorSpec spec_template = apply_sweep(cfg, value);
        validate(spec_template.resolved());  // before any worker thread runs
        if (spec_template.n < 2) throw ConfigError("sweep requires n >= 2");
        std::vector<ReplicateOutcome> outcomes(
            static_cast<std::size_t>(cfg.replicates));

        auto run_range = [&](int begin, int stride) {
            for (int r = begin; r < cfg.replicates; r += stride) {
                GeneratorSpec spec = spec_template;
                spec.seed = seed_mix(cfg.seed, std::bit_cast<std::uint64_t>(value),
                                     static_cast<std::uint64_t>(r));
                const GeneratedGraph gen = generate(spec);

                ReplicateOutcome& out = outcomes[static_cast<std::size_t>(r)];
                try {
                    OptimizerConfig opt;
                    opt.seed = seed_mix(spec.seed, kDetectStream);
                    opt.restarts = cfg.restarts;
                    const DetectionResult det = detect(gen.graph, opt);
                    out.accuracy = cfg.model == Model::ER
                                       ? 0.0
                                       : accuracy(det.labels, gen.true_labels);
                    out.t = det.t;
                    out.time_s = det.wall_time_s;
                    out.passes = static_cast<double>(det.passes);
                } catch (const DegenerateGraphError&) {
                    out.failed = true;
                }
            }
        };

        const int workers = std::min(cfg.threads, cfg.replicates);
        if (workers <= 1) {
            run_range(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run_range, w, workers);
            for (auto& th : pool) th.join();
        }

        SweepRow row;
        row.swept_value = value;
        double acc = 0.0, t = 0.0, time_s = 0.0, passes = 0.0;
        for (const ReplicateOutcome& out : outcomes) {
            if (out.failed) {
                ++row.failures;
                continue;
            }
            ++row.replicate_count;
            acc += out.accuracy;
            t += out.t;
            time_s += out.time_s;
            passes += out.passes;
        }
        if (row.replicate_count > 0) {
            const double count = row.replicate_count;
            if (cfg.model != Model::ER) row.mean_accuracy = acc / count;
            row.mean_t = t / count;
            row.mean_time_s = time_s / count;
            row.mean_passes = passes / count;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::string& swept_param,
                     const std::vector<SweepRow>& rows) {
    out << "swept_param,value,mean_accuracy,mean_T,mean_time_s,mean_passes,replicates\n";
    for (const SweepRow& row : rows) {
        out << swept_param << ',' << fmt_double(row.swept_value) << ','
            << (row.mean_accuracy ? fmt_double(*row.mean_accuracy) : std::string())
            << ',' << fmt_double(row.mean_t) << ',' << fmt_double(row.mean_time_s)
            << ',' << fmt_double(row.mean_passes) << ',' << row.replicate_count
            << '\n';
    }
}

ParsedSweepCsv read_sweep_csv(std::istream& in) {
    ParsedSweepCsv parsed;
    std::string line;
    if (!std::getline(in, line) ||
        line != "swept_param,value,mean_accuracy,mean_T,mean_time_s,mean_passes,replicates")
        throw std::runtime_error("sweep CSV: bad or missing header");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ss(line);
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.emplace_back();
        if (fields.size() != 7)
            throw std::runtime_error("sweep CSV: wrong field count on line " +
                                     std::to_string(line_no));

        SweepRow row;
        parsed.swept_param = fields[0];
        row.swept_value = std::stod(fields[1]);
        if (!fields[2].empty()) row.mean_accuracy = std::stod(fields[2]);
        row.mean_t = std::stod(fields[3]);
        row.mean_time_s = std::stod(fields[4]);
        row.mean_passes = std::stod(fields[5]);
        row.replicate_count = std::stoi(fields[6]);
        parsed.rows.push_back(std::move(row));
    }
    return parsed;
}

ProfileReport profile_network(const Graph& g, const OptimizerConfig& cfg) {
    const DetectionResult det = detect(g, cfg);
    return {det.t, det.k, det.wall_time_s, det.passes, det.converged};
}

} // namespace cpdetect

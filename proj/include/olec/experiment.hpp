#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "olec/colorer.hpp"
#include "olec/game.hpp"
#include "olec/generate.hpp"
#include "olec/graph.hpp"
#include "olec/matcher.hpp"
#include "olec/random.hpp"
#include "olec/stats.hpp"

namespace olec {

enum class StrategyKind { Greedy, Cascade, TreeColoring, Pipeline, BlankEps, Matcher };

inline const char* strategy_name(StrategyKind s) {
    switch (s) {
        case StrategyKind::Greedy: return "greedy";
        case StrategyKind::Cascade: return "cascade";
        case StrategyKind::TreeColoring: return "tree-coloring";
        case StrategyKind::Pipeline: return "pipeline";
        case StrategyKind::BlankEps: return "blank-eps";
        case StrategyKind::Matcher: return "matcher";
    }
    return "?";
}

struct StrategyParams {
    double alpha = 1.0;
    double beta = 4.0;
    int delta_prime = 0;      // 0 = strategy default
    int g = 2;                // radius for the cycle-in-neighborhood metric
    double delta_small = 0.05;
    double eps = 0.1;
    double C = 0.0;           // matcher C; 0 = delta + 2*sqrt(delta) + 1
};

struct ExperimentConfig {
    GeneratorSpec generator;
    StrategyKind strategy = StrategyKind::Greedy;
    StrategyParams params;
    int trials = 1;
    std::uint64_t seed = 0;
    int threads = 1;
    bool fix_graph = false;   // one graph for all trials; coins still vary
    bool timing = false;      // wall clock is nondeterministic, so opt-in only
    bool cycle_metric = false;
};

// Flat metric table; scope is "trial" or "aggregate". Row order and float
// formatting are deterministic, so equal seeds give byte-identical reports
// at any thread count.
struct Report {
    struct Row {
        std::string scope;
        int trial;  // -1 for aggregate rows
        std::string metric;
        double value;
    };
    std::vector<Row> rows;

    void add(const std::string& scope, int trial, const std::string& metric, double value) {
        rows.push_back({scope, trial, metric, value});
    }

    std::string to_csv() const {
        std::ostringstream out;
        out << "# schema=1\n";
        out << "scope,trial,metric,value\n";
        for (const auto& r : rows) {
            out << r.scope << ',';
            if (r.trial >= 0) out << r.trial;
            out << ',' << r.metric << ',' << format_double(r.value) << '\n';
        }
        return out.str();
    }

    std::string to_json() const {
        std::ostringstream out;
        out << "{\"schema\":1,\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            if (i) out << ',';
            out << "{\"scope\":\"" << r.scope << "\",\"trial\":";
            if (r.trial >= 0)
                out << r.trial;
            else
                out << "null";
            out << ",\"metric\":\"" << r.metric << "\",\"value\":" << format_double(r.value)
                << '}';
        }
        out << "]}";
        return out.str();
    }

    std::optional<double> find(const std::string& scope, const std::string& metric) const {
        for (const auto& r : rows)
            if (r.scope == scope && r.metric == metric) return r.value;
        return std::nullopt;
    }
};

namespace detail {

struct TrialMetrics {
    std::vector<std::pair<std::string, double>> values;
    void add(const std::string& k, double v) { values.push_back({k, v}); }
};

inline double cycle_frequency(const Graph& g, int radius, std::uint64_t seed) {
    const int m = g.edge_count();
    if (m == 0) return 0.0;
    const int sample = std::min(m, 2000);
    LocalRng rng(seed ^ 0x6379636c65ULL);
    long long hits = 0;
    for (int i = 0; i < sample; ++i) {
        const int id = sample == m ? i : static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        if (neighborhood_has_cycle(g, id, radius)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(sample);
}

inline TrialMetrics run_trial(const ExperimentConfig& cfg, int trial) {
    TrialMetrics metrics;
    const std::uint64_t graph_seed =
        cfg.fix_graph ? sublabel(cfg.seed, 0)
                      : sublabel(sublabel(cfg.seed, 0), static_cast<std::uint64_t>(trial) + 1);
    const EdgeStream stream = generate(cfg.generator, graph_seed);
    const Graph& graph = stream.graph();
    const int n = graph.vertex_count();
    const int m = graph.edge_count();
    const int delta = graph.delta();
    const RandomSource src{cfg.seed};
    const std::uint64_t coins = sublabel(0xC01AB5ULL, static_cast<std::uint64_t>(trial));

    metrics.add("edges", static_cast<double>(m));
    metrics.add("vertices", static_cast<double>(n));
    metrics.add("delta", static_cast<double>(delta));
    if (cfg.cycle_metric)
        metrics.add("cycle_g" + std::to_string(cfg.params.g) + "_frequency",
                    cycle_frequency(graph, cfg.params.g, graph_seed));

    auto emit_coloring_metrics = [&](const ColoringState& state, long long uncolored) {
        metrics.add("colors_used", static_cast<double>(state.palette_size()));
        metrics.add("colors_over_delta",
                    static_cast<double>(state.palette_size()) / static_cast<double>(delta));
        metrics.add("uncolored_fraction",
                    m > 0 ? static_cast<double>(uncolored) / static_cast<double>(m) : 0.0);
    };

    switch (cfg.strategy) {
        case StrategyKind::Greedy: {
            ColoringState state(n, m, delta);
            for (int k = 0; k < m; ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = graph.edge(id);
                greedy_color(state, id, u, v);
            }
            emit_coloring_metrics(state, 0);
            break;
        }
        case StrategyKind::BlankEps: {
            ColoringState state(n, m, delta);
            BlankEpsColorer strat(delta, cfg.params.eps);
            long long blank = 0;
            for (int k = 0; k < m; ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = graph.edge(id);
                const double r = uniform_draw(src, coins, static_cast<std::uint64_t>(id));
                if (!strat.color_edge(state, id, u, v, r)) ++blank;
            }
            emit_coloring_metrics(state, blank);
            break;
        }
        case StrategyKind::TreeColoring: {
            ColoringState state(n, m, delta);
            TreeColoringColorer strat(TreeColoringConfig::from_delta(delta), n, src, coins);
            long long uncolored = 0;
            for (int k = 0; k < m; ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = graph.edge(id);
                if (!strat.color_edge(state, id, u, v)) ++uncolored;
            }
            emit_coloring_metrics(state, uncolored);
            break;
        }
        case StrategyKind::Cascade: {
            ColoringState state(n, m, delta);
            const int dp = cfg.params.delta_prime > 0 ? cfg.params.delta_prime
                                                      : std::min(delta, 31);
            CascadeColorer strat(CascadeConfig::make(delta, dp, std::max<long long>(n, 2),
                                                     cfg.params.alpha, cfg.params.beta,
                                                     cfg.params.delta_small),
                                 n, src, coins);
            long long fallback = 0;
            for (int k = 0; k < m; ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = graph.edge(id);
                if (strat.color_edge(state, id, u, v).second < 0) ++fallback;
            }
            emit_coloring_metrics(state, 0);
            metrics.add("fallback_fraction",
                        m > 0 ? static_cast<double>(fallback) / static_cast<double>(m) : 0.0);
            metrics.add("cascade_rounds", static_cast<double>(strat.rounds()));
            break;
        }
        case StrategyKind::Pipeline: {
            ColoringState state(n, m, delta);
            const int dp = cfg.params.delta_prime > 0
                               ? cfg.params.delta_prime
                               : pipeline_default_delta_prime(delta, n);
            RandomOrderPipeline strat(n, delta, dp, src, coins);
            for (int k = 0; k < m; ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = graph.edge(id);
                strat.color_edge(state, id, u, v);
            }
            emit_coloring_metrics(state, 0);
            metrics.add("leftover_max_degree", static_cast<double>(strat.leftover_max_degree()));
            metrics.add("leftover_fraction",
                        m > 0 ? static_cast<double>(strat.leftover_edges()) /
                                    static_cast<double>(m)
                              : 0.0);
            metrics.add("parts", static_cast<double>(strat.T()));
            break;
        }
        case StrategyKind::Matcher: {
            const double d = static_cast<double>(delta);
            const double C = cfg.params.C > 0.0 ? cfg.params.C : d + 2.0 * std::sqrt(d) + 1.0;
            MatcherState state(n, C, delta);
            for (int k = 0; k < m; ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = graph.edge(id);
                state.process_edge(id, u, v,
                                   uniform_draw(src, coins, static_cast<std::uint64_t>(id)));
            }
            // Hard invariant: the matching is a matching.
            std::vector<char> touched(static_cast<std::size_t>(n), 0);
            for (int id : state.matching()) {
                auto [u, v] = graph.edge(id);
                if (touched[static_cast<std::size_t>(u)] || touched[static_cast<std::size_t>(v)])
                    throw std::runtime_error("matching validity violated");
                touched[static_cast<std::size_t>(u)] = 1;
                touched[static_cast<std::size_t>(v)] = 1;
            }
            metrics.add("matched_count", static_cast<double>(state.matching().size()));
            metrics.add("match_frequency",
                        m > 0 ? static_cast<double>(state.matching().size()) /
                                    static_cast<double>(m)
                              : 0.0);
            metrics.add("matcher_C", C);
            break;
        }
    }
    return metrics;
}

} // namespace detail

// Runs the trials (in parallel when asked), validating hard invariants
// inline; any violation aborts with the offending trial's seed.
inline Report run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("run_experiment: trials >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<detail::TrialMetrics> slots(static_cast<std::size_t>(cfg.trials));
    std::vector<std::string> failures(static_cast<std::size_t>(cfg.trials));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= cfg.trials) return;
            try {
                slots[static_cast<std::size_t>(t)] = detail::run_trial(cfg, t);
            } catch (const std::exception& ex) {
                failures[static_cast<std::size_t>(t)] =
                    std::string(ex.what()) + " (trial " + std::to_string(t) + ", seed " +
                    std::to_string(cfg.seed) + ")";
            }
        }
    };
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& f : failures)
        if (!f.empty()) throw std::runtime_error("invariant violation: " + f);

    Report report;
    report.add("meta", -1, "trials", static_cast<double>(cfg.trials));
    report.add("meta", -1, "seed", static_cast<double>(cfg.seed));
    for (int t = 0; t < cfg.trials; ++t)
        for (const auto& [k, v] : slots[static_cast<std::size_t>(t)].values)
            report.add("trial", t, k, v);

    // Aggregates: mean/min/max per metric, in sorted metric order.
    std::map<std::string, std::vector<double>> by_metric;
    for (int t = 0; t < cfg.trials; ++t)
        for (const auto& [k, v] : slots[static_cast<std::size_t>(t)].values)
            by_metric[k].push_back(v);
    for (const auto& [k, vals] : by_metric) {
        double sum = 0.0, lo = vals[0], hi = vals[0];
        for (double v : vals) {
            sum += v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        report.add("aggregate", -1, k + "_mean", sum / static_cast<double>(vals.size()));
        report.add("aggregate", -1, k + "_min", lo);
        report.add("aggregate", -1, k + "_max", hi);
    }
    // Pooled matcher frequency with its 4-sigma binomial band.
    if (by_metric.count("matched_count") && by_metric.count("edges")) {
        long long matched = 0, edges = 0;
        for (double v : by_metric["matched_count"]) matched += static_cast<long long>(v);
        for (double v : by_metric["edges"]) edges += static_cast<long long>(v);
        const BinomialBand band = binomial_band4(matched, edges);
        report.add("aggregate", -1, "pooled_match_frequency", band.freq);
        report.add("aggregate", -1, "pooled_match_frequency_ci_lo", band.lo);
        report.add("aggregate", -1, "pooled_match_frequency_ci_hi", band.hi);
    }
    if (cfg.timing) {
        const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        report.add("timing", -1, "wall_clock_ms", static_cast<double>(dt));
    }
    return report;
}

} // namespace olec

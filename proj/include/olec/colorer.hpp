#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "olec/matcher.hpp"
#include "olec/random.hpp"
#include "olec/recurrence.hpp"
#include "olec/sparsifier.hpp"

namespace olec {

struct PropernessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tracks the coloring built so far. Colors are irrevocable and properness is
// enforced on every assignment.
class ColoringState {
public:
    ColoringState(int n, int m, int delta)
        : delta_(delta), color_(static_cast<std::size_t>(m), -1),
          round_(static_cast<std::size_t>(m), -1),
          used_(static_cast<std::size_t>(n)) {}

    int delta() const { return delta_; }
    int color_of(int edge_id) const { return color_[static_cast<std::size_t>(edge_id)]; }
    int round_of(int edge_id) const { return round_[static_cast<std::size_t>(edge_id)]; }
    bool color_used_at(int v, int color) const {
        return used_[static_cast<std::size_t>(v)].count(color) > 0;
    }
    const std::unordered_set<int>& used_at(int v) const {
        return used_[static_cast<std::size_t>(v)];
    }
    int palette_size() const { return static_cast<int>(palette_.size()); }
    int max_color() const { return max_color_; }
    int colored_count() const { return colored_; }

    void assign(int edge_id, int u, int v, int color, int round) {
        if (color_[static_cast<std::size_t>(edge_id)] != -1)
            throw PropernessViolation("color reassignment at edge " + std::to_string(edge_id));
        if (color_used_at(u, color) || color_used_at(v, color))
            throw PropernessViolation("properness violated at edge " + std::to_string(edge_id));
        color_[static_cast<std::size_t>(edge_id)] = color;
        round_[static_cast<std::size_t>(edge_id)] = round;
        used_[static_cast<std::size_t>(u)].insert(color);
        used_[static_cast<std::size_t>(v)].insert(color);
        palette_.insert(color);
        max_color_ = std::max(max_color_, color);
        ++colored_;
    }

    // Smallest color id >= base absent at both endpoints.
    int smallest_free(int u, int v, int base = 0) const {
        int c = base;
        while (color_used_at(u, c) || color_used_at(v, c)) ++c;
        return c;
    }

private:
    int delta_;
    std::vector<int> color_;
    std::vector<int> round_;
    std::vector<std::unordered_set<int>> used_;
    std::unordered_set<int> palette_;
    int max_color_ = -1;
    int colored_ = 0;
};

// Greedy baseline: first color free at both endpoints. Never needs more than
// 2*delta - 1 colors on a delta-bounded stream.
inline int greedy_color(ColoringState& state, int edge_id, int u, int v) {
    const int c = state.smallest_free(u, v);
    if (c > 2 * state.delta() - 2)
        throw PropernessViolation("greedy exceeded 2*delta-1 palette at edge " +
                                  std::to_string(edge_id));
    state.assign(edge_id, u, v, c, -1);
    return c;
}

// Round schedule for the repeated-matching cascade:
//   dhat_i = max(ceil(delta - (i-1)/alpha + beta*sqrt(delta*ln n)), floor),
//   floor  = ceil(beta*sqrt(delta*ln n)),
// emitted until the value reaches the floor.
inline std::vector<int> dhat_schedule(int delta, double alpha, double beta, long long n) {
    if (delta < 1) throw std::invalid_argument("dhat_schedule: delta >= 1");
    if (!(alpha >= 1.0)) throw std::invalid_argument("dhat_schedule: alpha >= 1");
    if (beta < 0.0 || n < 2) throw std::invalid_argument("dhat_schedule: beta >= 0, n >= 2");
    const double slack =
        beta * std::sqrt(static_cast<double>(delta) * std::log(static_cast<double>(n)));
    const int floor_value = static_cast<int>(std::ceil(slack));
    std::vector<int> schedule;
    for (long long i = 1;; ++i) {
        const double raw = static_cast<double>(delta) -
                           static_cast<double>(i - 1) / alpha + slack;
        const int dhat = std::max(static_cast<int>(std::ceil(raw)), floor_value);
        if (dhat <= floor_value) break;
        schedule.push_back(dhat);
        if (schedule.size() > 1000000)
            throw std::invalid_argument("dhat_schedule: schedule too long");
    }
    return schedule;
}

struct CascadeConfig {
    double alpha = 1.0;
    double beta = 4.0;
    long long n = 2;
    int delta = 1;
    int delta_prime = 31;
    double delta_small = 0.05;     // the delta in C = (e/(e-1)+delta)*delta_prime
    std::vector<int> schedule;     // from dhat_schedule when empty
    int fallback_threshold = 0;

    static CascadeConfig make(int delta, int delta_prime, long long n, double alpha = 1.0,
                              double beta = 4.0, double delta_small = 0.05) {
        CascadeConfig cfg;
        cfg.alpha = alpha;
        cfg.beta = beta;
        cfg.n = n;
        cfg.delta = delta;
        cfg.delta_prime = delta_prime;
        cfg.delta_small = delta_small;
        cfg.schedule = dhat_schedule(delta, alpha, beta, n);
        const double slack = beta * std::sqrt(static_cast<double>(delta) *
                                              std::log(static_cast<double>(n)));
        cfg.fallback_threshold = static_cast<int>(std::ceil(slack));
        return cfg;
    }
};

// Repeated online matching: every arriving edge cascades through rounds, each
// round running its own subsample(dhat_i -> delta_prime) + matching pipeline
// on the edges the earlier rounds left uncolored. The first round that keeps
// and matches the edge assigns its color; edges no round takes fall back to a
// greedy reserve palette disjoint from all round colors.
class CascadeColorer {
public:
    CascadeColorer(const CascadeConfig& cfg, int n_vertices, const RandomSource& src,
                   std::uint64_t instance)
        : cfg_(cfg), src_(src), instance_(instance) {
        if (cfg_.schedule.empty()) throw std::invalid_argument("cascade: empty schedule");
        const double C =
            (kEulerRatio + cfg_.delta_small) * static_cast<double>(cfg_.delta_prime);
        const double dp = static_cast<double>(cfg_.delta_prime);
        if (!(C > dp + 2.0 * std::sqrt(dp)))
            throw std::invalid_argument("cascade: C too small for delta_prime");
        bool needs_subsample = false;
        for (std::size_t i = 0; i < cfg_.schedule.size(); ++i) {
            const int dhat = cfg_.schedule[i];
            if (i + 1 < cfg_.schedule.size() && cfg_.schedule[i + 1] > dhat)
                throw std::invalid_argument("cascade: schedule must be non-increasing");
            if (dhat > cfg_.delta_prime) needs_subsample = true;
        }
        if (needs_subsample && cfg_.delta_prime < 31)
            throw std::invalid_argument(
                "cascade: subsampling rounds require delta_prime >= 31");
        rounds_.reserve(cfg_.schedule.size());
        for (std::size_t i = 0; i < cfg_.schedule.size(); ++i) {
            Round r;
            r.dhat = cfg_.schedule[i];
            if (r.dhat > cfg_.delta_prime)
                r.subsample.emplace(n_vertices, r.dhat, cfg_.delta_prime);
            r.matcher.emplace(n_vertices, C);
            r.offered.assign(static_cast<std::size_t>(n_vertices), 0);
            rounds_.push_back(std::move(r));
        }
        reserve_base_ = static_cast<int>(cfg_.schedule.size());
    }

    int reserve_base() const { return reserve_base_; }
    int rounds() const { return static_cast<int>(rounds_.size()); }

    // Returns (color, round); round < 0 marks the greedy reserve.
    std::pair<int, int> color_edge(ColoringState& state, int edge_id, int u, int v) {
        for (std::size_t i = 0; i < rounds_.size(); ++i) {
            Round& r = rounds_[i];
            if (r.offered[static_cast<std::size_t>(u)] >= r.dhat ||
                r.offered[static_cast<std::size_t>(v)] >= r.dhat)
                continue;  // residual degree cap: this round never sees the edge
            ++r.offered[static_cast<std::size_t>(u)];
            ++r.offered[static_cast<std::size_t>(v)];
            const std::uint64_t round_label = sublabel(instance_, i);
            if (r.subsample) {
                const double rs =
                    uniform_draw(src_, sublabel(round_label, 0),
                                 static_cast<std::uint64_t>(edge_id));
                if (r.subsample->process_edge(edge_id, u, v, rs) != SubsampleOutcome::Kept)
                    continue;
            }
            const double rm = uniform_draw(src_, sublabel(round_label, 1),
                                           static_cast<std::uint64_t>(edge_id));
            if (r.matcher->process_edge(edge_id, u, v, rm) == MatchOutcome::Matched) {
                const int color = static_cast<int>(i);
                state.assign(edge_id, u, v, color, static_cast<int>(i));
                return {color, static_cast<int>(i)};
            }
        }
        const int color = state.smallest_free(u, v, reserve_base_);
        state.assign(edge_id, u, v, color, -1);
        return {color, -1};
    }

private:
    struct Round {
        int dhat = 0;
        std::optional<SubsampleState> subsample;
        std::optional<MatcherState> matcher;
        std::vector<int> offered;
    };

    CascadeConfig cfg_;
    RandomSource src_;
    std::uint64_t instance_;
    std::vector<Round> rounds_;
    int reserve_base_ = 0;
};

struct TreeColoringConfig {
    int delta = 1;
    std::vector<double> c_schedule;  // C_1 .. C_delta

    // C_1 = delta + delta^(3/4), C_{i+1} = C_i - 1 + delta^(-1/12).
    static TreeColoringConfig from_delta(int delta) {
        if (delta < 1) throw std::invalid_argument("tree-coloring: delta >= 1");
        TreeColoringConfig cfg;
        cfg.delta = delta;
        const double d = static_cast<double>(delta);
        double C = d + std::pow(d, 0.75);
        const double decrement = 1.0 - std::pow(d, -1.0 / 12.0);
        for (int i = 0; i < delta; ++i) {
            if (!(C > 0.0)) throw std::invalid_argument("tree-coloring: schedule hit zero");
            cfg.c_schedule.push_back(C);
            C -= decrement;
        }
        return cfg;
    }
};

// Online form of the staged tree coloring: rounds run in parallel, each with
// its own matcher at parameter C_i. A vertex retires from round i once its
// round-i arrival counter reaches ceil(C_i); residual edges at a retired
// vertex skip that round but stay in play for later rounds.
class TreeColoringColorer {
public:
    TreeColoringColorer(const TreeColoringConfig& cfg, int n_vertices, const RandomSource& src,
                        std::uint64_t instance)
        : cfg_(cfg), src_(src), instance_(instance) {
        if (cfg_.c_schedule.empty())
            throw std::invalid_argument("tree-coloring: empty schedule");
        rounds_.reserve(cfg_.c_schedule.size());
        for (double C : cfg_.c_schedule) {
            if (!(C > 0.0)) throw std::invalid_argument("tree-coloring: C must be positive");
            rounds_.emplace_back(n_vertices, C);
        }
        diverted_.assign(cfg_.c_schedule.size(), 0);
    }

    int rounds() const { return static_cast<int>(rounds_.size()); }
    long long diverted(int round) const { return diverted_[static_cast<std::size_t>(round)]; }

    // Returns the winning round (color = color_base + round) or nullopt.
    std::optional<int> color_edge(ColoringState& state, int edge_id, int u, int v,
                                  int color_base = 0) {
        for (std::size_t i = 0; i < rounds_.size(); ++i) {
            MatcherState& m = rounds_[i];
            const int retire_at =
                static_cast<int>(std::ceil(cfg_.c_schedule[i]));
            if (m.degree(u) >= retire_at || m.degree(v) >= retire_at) {
                ++diverted_[i];  // the round's reject set; edge moves on
                continue;
            }
            const double r = uniform_draw(src_, sublabel(instance_, i),
                                          static_cast<std::uint64_t>(edge_id));
            if (m.process_edge(edge_id, u, v, r) == MatchOutcome::Matched) {
                const int round = static_cast<int>(i);
                state.assign(edge_id, u, v, color_base + round, round);
                return round;
            }
        }
        return std::nullopt;
    }

private:
    TreeColoringConfig cfg_;
    RandomSource src_;
    std::uint64_t instance_;
    std::vector<MatcherState> rounds_;
    std::vector<long long> diverted_;
};

// delta_prime default for the random-order pipeline:
// c * min(ln(delta)/ln(ln(delta)), sqrt(delta/ln(n))), floored at 2.
inline int pipeline_default_delta_prime(int delta, long long n, double c = 1.0) {
    const double d = static_cast<double>(delta);
    const double ln_d = std::log(std::max(d, 3.0));
    const double a = ln_d / std::max(std::log(ln_d), 1e-9);
    const double b = std::sqrt(d / std::log(static_cast<double>(std::max<long long>(n, 3))));
    return std::max(2, static_cast<int>(c * std::min(a, b)));
}

// Random-order composition: split into T parts, tree-color each part with a
// disjoint palette of size delta_part = delta_prime + ceil(3*sqrt(dp*ln dp)),
// and color rejected plus uncolored edges greedily from one shared reserve.
class RandomOrderPipeline {
public:
    RandomOrderPipeline(int n_vertices, int delta, int delta_prime, const RandomSource& src,
                        std::uint64_t instance)
        : split_(n_vertices, delta, delta_prime), src_(src), instance_(instance),
          leftover_degree_(static_cast<std::size_t>(n_vertices), 0) {
        const double dp = static_cast<double>(delta_prime);
        delta_part_ = delta_prime +
                      static_cast<int>(std::ceil(3.0 * std::sqrt(dp * std::log(dp))));
        const TreeColoringConfig part_cfg = TreeColoringConfig::from_delta(delta_part_);
        parts_.reserve(static_cast<std::size_t>(split_.T()));
        for (int i = 0; i < split_.T(); ++i)
            parts_.emplace_back(part_cfg, n_vertices, src,
                                sublabel(instance, static_cast<std::uint64_t>(i) + 1));
        reserve_base_ = split_.T() * delta_part_;
    }

    int T() const { return split_.T(); }
    int delta_part() const { return delta_part_; }
    int reserve_base() const { return reserve_base_; }
    long long leftover_edges() const { return leftover_edges_; }
    int leftover_max_degree() const {
        int d = 0;
        for (int x : leftover_degree_) d = std::max(d, x);
        return d;
    }

    // Returns (color, round): round = part-local round for part-colored
    // edges, -1 for reserve.
    std::pair<int, int> color_edge(ColoringState& state, int edge_id, int u, int v) {
        const double rs =
            uniform_draw(src_, sublabel(instance_, 0), static_cast<std::uint64_t>(edge_id));
        const SplitOutcome where = split_.process_edge(edge_id, u, v, rs);
        if (!where.rejected()) {
            TreeColoringColorer& part = parts_[static_cast<std::size_t>(where.part - 1)];
            const int base = (where.part - 1) * delta_part_;
            const auto round = part.color_edge(state, edge_id, u, v, base);
            if (round) return {base + *round, *round};
        }
        ++leftover_edges_;
        ++leftover_degree_[static_cast<std::size_t>(u)];
        ++leftover_degree_[static_cast<std::size_t>(v)];
        const int color = state.smallest_free(u, v, reserve_base_);
        state.assign(edge_id, u, v, color, -1);
        return {color, -1};
    }

private:
    SplitState split_;
    RandomSource src_;
    std::uint64_t instance_;
    int delta_part_ = 0;
    std::vector<TreeColoringColorer> parts_;
    int reserve_base_ = 0;
    long long leftover_edges_ = 0;
    std::vector<int> leftover_degree_;
};

// Experimental delta+1-state strategy: with probability eps leave the edge
// blank, otherwise pick uniformly among the palette colors free at both
// endpoints (blank when none remain). No guarantee is claimed.
class BlankEpsColorer {
public:
    BlankEpsColorer(int delta, double eps) : delta_(delta), eps_(eps) {
        if (!(eps >= 0.0 && eps <= 1.0))
            throw std::invalid_argument("blank-eps: eps must be in [0,1]");
    }

    // Returns the color or nullopt (blank). A single draw r drives both the
    // blank coin and the uniform color choice.
    std::optional<int> color_edge(ColoringState& state, int edge_id, int u, int v, double r) {
        if (r < eps_) return std::nullopt;
        std::vector<int> available;
        available.reserve(static_cast<std::size_t>(delta_));
        for (int c = 0; c < delta_; ++c)
            if (!state.color_used_at(u, c) && !state.color_used_at(v, c))
                available.push_back(c);
        if (available.empty()) return std::nullopt;
        const double unit = eps_ < 1.0 ? (r - eps_) / (1.0 - eps_) : 0.0;
        std::size_t pick = static_cast<std::size_t>(unit * static_cast<double>(available.size()));
        if (pick >= available.size()) pick = available.size() - 1;
        const int color = available[pick];
        state.assign(edge_id, u, v, color, 0);
        return color;
    }

private:
    int delta_;
    double eps_;
};

} // namespace olec

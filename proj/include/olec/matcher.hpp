#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace olec {

// Acceptance probability of an arriving edge whose endpoints have seen d_u
// and d_v earlier arrivals: C/((C-d_u)(C-d_v)), clamped to [0,1].
// Requires C > max(d_u, d_v); with C > delta + 2*sqrt(delta) the clamp
// never fires on a delta-bounded stream.
inline double accept_probability(double C, int d_u, int d_v) {
    if (!(C > static_cast<double>(std::max(d_u, d_v))))
        throw std::domain_error("accept_probability: requires C > max(d_u, d_v)");
    const double p = C / ((C - d_u) * (C - d_v));
    return std::clamp(p, 0.0, 1.0);
}

enum class MatchOutcome { Matched, SkippedNeighborMatched, RejectedByCoin };

// Online matching engine. Arrival-degree counters advance on every arrival,
// matched or not, so each edge's acceptance threshold is a deterministic
// function of the arrival order alone.
class MatcherState {
public:
    // declared_delta, when given, validates C > delta + 2*sqrt(delta) upfront.
    MatcherState(int n, double C, std::optional<int> declared_delta = std::nullopt)
        : C_(C),
          degree_(static_cast<std::size_t>(n), 0),
          matched_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("MatcherState: negative vertex count");
        if (declared_delta) {
            const double d = static_cast<double>(*declared_delta);
            if (!(C > d + 2.0 * std::sqrt(d)))
                throw std::invalid_argument(
                    "MatcherState: requires C > delta + 2*sqrt(delta)");
        }
        if (!(C > 0)) throw std::invalid_argument("MatcherState: C must be positive");
    }

    double C() const { return C_; }
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    bool is_matched(int v) const { return matched_[static_cast<std::size_t>(v)] != 0; }
    const std::vector<int>& matching() const { return matching_; }
    int arrivals() const { return arrivals_; }

    // Threshold the next arrival at (u,v) would face; deterministic in the
    // arrival history regardless of coin values.
    double accept_threshold(int u, int v) const {
        return accept_probability(C_, degree(u), degree(v));
    }

    MatchOutcome process_edge(int edge_id, int u, int v, double r) {
        MatchOutcome out;
        if (is_matched(u) || is_matched(v)) {
            out = MatchOutcome::SkippedNeighborMatched;
        } else {
            const double p = accept_probability(C_, degree(u), degree(v));
            if (r <= p) {
                matched_[static_cast<std::size_t>(u)] = 1;
                matched_[static_cast<std::size_t>(v)] = 1;
                matching_.push_back(edge_id);
                out = MatchOutcome::Matched;
            } else {
                out = MatchOutcome::RejectedByCoin;
            }
        }
        ++degree_[static_cast<std::size_t>(u)];
        ++degree_[static_cast<std::size_t>(v)];
        ++arrivals_;
        return out;
    }

private:
    double C_;
    std::vector<int> degree_;
    std::vector<char> matched_;
    std::vector<int> matching_;
    int arrivals_ = 0;
};

} // namespace olec

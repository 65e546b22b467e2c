#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "olec/graph.hpp"
#include "olec/random.hpp"

namespace olec {

enum class SubsampleOutcome { Kept, DroppedByCoin, DroppedByDegreeCap };

// Online degree sparsification for adversarial arrival order. Each edge
// passes a coin with probability (1-eta)*delta_prime/delta and is then kept
// only while both endpoint counters are below delta_prime. Counters count
// coin successes, not kept edges; the distinction matters and is pinned by
// tests.
class SubsampleState {
public:
    SubsampleState(int n, int delta, int delta_prime)
        : delta_(delta), delta_prime_(delta_prime),
          coin_successes_(static_cast<std::size_t>(n), 0) {
        if (delta_prime < 1 || delta < 1)
            throw std::invalid_argument("subsample: degrees must be >= 1");
        if (delta_prime > delta)
            throw std::invalid_argument("subsample: requires delta_prime <= delta");
        eta_ = 3.0 * std::sqrt(std::log(static_cast<double>(delta_prime)) /
                               static_cast<double>(delta_prime));
        // eta in (0,1) needs delta_prime/ln(delta_prime) > 9, i.e. delta_prime >= 31.
        if (!(eta_ > 0.0 && eta_ < 1.0))
            throw std::invalid_argument(
                "subsample: eta = 3*sqrt(ln(delta_prime)/delta_prime) not in (0,1); "
                "needs delta_prime >= 31");
    }

    double eta() const { return eta_; }
    double coin_threshold() const {
        return (1.0 - eta_) * static_cast<double>(delta_prime_) / static_cast<double>(delta_);
    }
    int coin_successes(int v) const { return coin_successes_[static_cast<std::size_t>(v)]; }
    int delta_prime() const { return delta_prime_; }
    const std::vector<int>& kept() const { return kept_; }
    int kept_degree(int v) const {
        return v < static_cast<int>(kept_degree_.size()) ? kept_degree_[static_cast<std::size_t>(v)] : 0;
    }

    SubsampleOutcome process_edge(int edge_id, int u, int v, double r) {
        if (r > coin_threshold()) return SubsampleOutcome::DroppedByCoin;
        SubsampleOutcome out;
        if (coin_successes(u) < delta_prime_ && coin_successes(v) < delta_prime_) {
            kept_.push_back(edge_id);
            bump_kept(u);
            bump_kept(v);
            out = SubsampleOutcome::Kept;
        } else {
            out = SubsampleOutcome::DroppedByDegreeCap;
        }
        ++coin_successes_[static_cast<std::size_t>(u)];
        ++coin_successes_[static_cast<std::size_t>(v)];
        return out;
    }

private:
    void bump_kept(int v) {
        if (static_cast<std::size_t>(v) >= kept_degree_.size())
            kept_degree_.resize(static_cast<std::size_t>(v) + 1, 0);
        ++kept_degree_[static_cast<std::size_t>(v)];
    }

    int delta_;
    int delta_prime_;
    double eta_;
    std::vector<int> coin_successes_;
    std::vector<int> kept_degree_;
    std::vector<int> kept_;
};

struct SplitOutcome {
    int part;  // 1..T, or 0 when rejected
    bool rejected() const { return part == 0; }
};

// Random-order sparsification: marks each edge with a uniform color in
// {1..T}, T = ceil(delta/delta_prime), and rejects an edge once either
// endpoint collects more than delta_prime + 3*sqrt(delta_prime*ln delta_prime)
// marks of that color. Per-color part degrees never exceed the cap.
class SplitState {
public:
    SplitState(int n, int delta, int delta_prime)
        : delta_prime_(delta_prime) {
        if (delta_prime < 2 || delta < 1)
            throw std::invalid_argument("split: requires delta_prime >= 2");
        T_ = static_cast<int>((static_cast<long long>(delta) + delta_prime - 1) / delta_prime);
        if (T_ < 1) T_ = 1;
        slack_ = 3.0 * std::sqrt(static_cast<double>(delta_prime) *
                                 std::log(static_cast<double>(delta_prime)));
        marks_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(T_), 0);
        parts_.assign(static_cast<std::size_t>(T_) + 1, {});
    }

    int T() const { return T_; }
    double slack() const { return slack_; }
    double cap() const { return static_cast<double>(delta_prime_) + slack_; }
    int marks(int v, int part) const {
        return marks_[static_cast<std::size_t>(v) * static_cast<std::size_t>(T_) +
                      static_cast<std::size_t>(part - 1)];
    }
    // parts()[i] for i in 1..T; parts()[0] is the reject set.
    const std::vector<std::vector<int>>& parts() const { return parts_; }

    SplitOutcome process_edge(int edge_id, int u, int v, double r) {
        int part = 1 + static_cast<int>(r * T_);
        if (part > T_) part = T_;  // guards r just below 1.0 after rounding
        const int mu = ++marks_ref(u, part);
        const int mv = ++marks_ref(v, part);
        if (static_cast<double>(mu) <= cap() && static_cast<double>(mv) <= cap()) {
            parts_[static_cast<std::size_t>(part)].push_back(edge_id);
            return {part};
        }
        parts_[0].push_back(edge_id);
        return {0};
    }

private:
    int& marks_ref(int v, int part) {
        return marks_[static_cast<std::size_t>(v) * static_cast<std::size_t>(T_) +
                      static_cast<std::size_t>(part - 1)];
    }

    int delta_prime_;
    int T_;
    double slack_;
    std::vector<int> marks_;
    std::vector<std::vector<int>> parts_;
};

// Independent p-subsample of a stream: keeps each edge with probability p
// using one addressed draw per edge. This is the sampling model behind the
// locally-treelike frequency bound 3*D^(5g)/delta with p = D/delta.
inline std::vector<int> bernoulli_subsample(const EdgeStream& stream, double p,
                                            const RandomSource& src, std::uint64_t instance) {
    std::vector<int> kept;
    for (int k = 0; k < stream.size(); ++k) {
        const int id = stream.arrival(k);
        if (uniform_draw(src, instance, static_cast<std::uint64_t>(id)) < p) kept.push_back(id);
    }
    return kept;
}

} // namespace olec

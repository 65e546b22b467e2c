#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "olec/experiment.hpp"
#include "olec/game.hpp"
#include "olec/instances.hpp"
#include "olec/recurrence.hpp"
#include "olec/sparsifier.hpp"
#include "olec/stats.hpp"

namespace olec {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        lines.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + what);
        if (!ok) passed = false;
    }
};

// Depth of a witness-tree edge: number of edges from the root edge, so edges
// at the root endpoints have depth 1.
inline int witness_edge_depth(const WitnessTree& tree, int edge_id) {
    int depth = 1;
    int node = tree.edges[static_cast<std::size_t>(edge_id)].parent_node;
    while (tree.nodes[static_cast<std::size_t>(node)].parent_edge >= 0) {
        ++depth;
        node = tree.edges[static_cast<std::size_t>(
                              tree.nodes[static_cast<std::size_t>(node)].parent_edge)]
                   .parent_node;
    }
    return depth;
}

namespace suites {

inline SuiteResult recurrence_suite() {
    SuiteResult res{"recurrence"};

    res.check(std::abs(critical_C(100) - 158.19767068693265) < 1e-9, "critical_C(100)");
    {
        bool ok = true;
        for (int dp : {1, 7, 100, 1000}) {
            const double c = critical_C(dp);
            ok = ok && std::abs(std::log(c / (c - dp)) - 1.0) < 1e-12;
        }
        res.check(ok, "critical C defining identity ln(C/(C-D)) = 1");
    }
    {
        bool ok = true;
        for (double d = 0.002; d < 0.05; d += 0.002) {
            const double mid = std::exp(1.0 - d) / (std::exp(1.0 - d) - 1.0);
            ok = ok && kEulerRatio < mid && mid < kEulerRatio + d;
        }
        res.check(ok, "e/(e-1) < exp(1-d)/(exp(1-d)-1) < e/(e-1)+d for d < 1/20");
    }
    {
        bool ok = true;
        for (int di = 0; di <= 9; ++di)
            for (int ei = 0; ei <= 1000; ++ei)
                ok = ok && f_contraction_check(0.05 * di, 0.001 * ei);
        res.check(ok, "two-step contraction grid");
    }
    {
        bool ok = true;
        for (int delta : {25, 100, 1000})
            for (double f : {1.6, 2.0, 10.0}) {
                const double C = f * delta;
                ok = ok && riemann_gap(C, delta) <= 5.0 / C;
            }
        res.check(ok, "harmonic-sum vs log gap <= 5/C");
    }
    {
        bool ok = true;
        for (int i = 2; i <= 20; ++i)
            ok = ok && !period2_fixed_point(0.05 * i).has_value();
        for (int i = 21; i <= 40; ++i) {
            const double lambda = 0.05 * i;
            auto root = period2_fixed_point(lambda);
            if (!root) {
                ok = false;
                continue;
            }
            const double gx = 1.0 - std::exp(lambda * *root);
            const double ggx = 1.0 - std::exp(lambda * gx);
            ok = ok && std::abs(ggx - *root) <= 1e-10 && gx < 0.0 && *root > 0.0;
        }
        res.check(ok, "period-2 phase boundary at lambda = 1");
    }
    {
        // eps_step and q_step agree under eps = 1 - q*C/(C-c).
        LocalRng rng(20240901);
        double worst = 0.0;
        for (int it = 0; it < 10000; ++it) {
            const int k = 1 + static_cast<int>(rng.next_below(8));
            const double C = k + 1.5 + 18.5 * rng.next_double();
            std::vector<ChildTerm> children;
            std::vector<double> eps;
            for (int i = 0; i < k; ++i) {
                const int c_i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(
                    std::max(1.0, C - 1.0))));
                const double e_i = -1.0 + 2.0 * rng.next_double();
                const double q_i = (C - c_i) / C * (1.0 - e_i);
                if (q_i < 0.0 || q_i > 1.0) {
                    eps.clear();
                    break;
                }
                children.push_back({q_i, c_i});
                eps.push_back(e_i);
            }
            if (eps.size() != static_cast<std::size_t>(k)) continue;
            const double via_q = q_step(C, 0, children);
            const double via_eps = (C - k) / C * (1.0 - eps_step(C, eps));
            worst = std::max(worst, std::abs(via_q - via_eps));
        }
        res.check(worst <= 1e-12, "q_step/eps_step change-of-variables identity");
    }
    {
        // Envelope iteration dominated by the two-step and induction bounds.
        const RecurrenceParams params(41.0, 25, 1.0 - std::log(41.0 / 16.0));
        const ErrorProfile prof = envelope_iterate(params, 41);
        const double delta = 1.0 - params.lambda;
        bool two_ok = true, ind_ok = true;
        for (int l = 0; l + 2 <= prof.levels; l += 2) {
            const double bound = f_delta(delta, f_delta(delta, prof.eps_max[static_cast<std::size_t>(l)])) +
                                 1000.0 / params.C;
            two_ok = two_ok && prof.eps_max[static_cast<std::size_t>(l) + 2] <= bound + 1e-9;
        }
        const double K = 1000.0 / (delta * params.C);
        for (int l = 0; 2 * l <= prof.levels; ++l) {
            const double bound = (1.0 - K) * std::pow(1.0 - delta, l) + K;
            ind_ok = ind_ok && prof.eps_max[static_cast<std::size_t>(2 * l)] <= bound + 1e-9;
        }
        res.check(two_ok, "two-step envelope bound");
        res.check(ind_ok, "closed-form induction bound");
    }
    {
        // Large C: envelopes collapse toward zero.
        const RecurrenceParams params(1e6, 25, 0.05);
        const ErrorProfile prof = envelope_iterate(params, 10);
        res.check(std::abs(prof.eps_max[10]) < 1e-3 && std::abs(prof.eps_min[10]) < 1e-3,
                  "envelopes collapse as C grows");
    }
    {
        // Exact alternating errors on the complete 25-ary tree stay inside
        // the envelopes at every level.
        const double C = 250.0;
        const int dp = 25, g = 9;
        const RecurrenceParams params(C, dp, 0.05);
        const ErrorProfile prof = envelope_iterate(params, g);
        double eps = -static_cast<double>(dp) / (C - dp);
        bool ok = true;
        for (int l = 1; l <= g; ++l) {
            ok = ok && prof.eps_min[static_cast<std::size_t>(l)] <= eps + 1e-12 &&
                 eps <= prof.eps_max[static_cast<std::size_t>(l)] + 1e-12;
            eps = eps_step(C, std::vector<double>(static_cast<std::size_t>(dp), eps));
        }
        res.check(ok, "complete-tree errors sandwiched by envelopes");
    }
    return res;
}

inline SuiteResult game_suite() {
    SuiteResult res{"game"};
    const double C = 10.0;
    LocalRng rng(777001);

    {
        double worst = 0.0, worst_mc = 0.0;
        const RandomSource src{90210};
        for (int it = 0; it < 60; ++it) {
            WitnessTreeGenOptions opt;
            opt.max_edges = 12;
            WitnessTree tree = random_witness_tree(rng, opt);
            std::vector<bool> decisions;
            for (int b = 0; b < tree.boundary_count(); ++b)
                decisions.push_back(rng.next_below(2) == 1);
            const BoundaryAssignment boundary = BoundaryAssignment::fixed(decisions);
            const double by_enum = exact_match_probability(tree, boundary, C);
            const double by_dp = dp_match_probability(tree, boundary, C);
            worst = std::max(worst, std::abs(by_enum - by_dp));
            const long long sims = 20000;
            long long hits = 0;
            for (long long s = 0; s < sims; ++s)
                hits += simulate_game(tree, boundary, C, src,
                                      sublabel(static_cast<std::uint64_t>(it), static_cast<std::uint64_t>(s)))
                            ? 1
                            : 0;
            const double freq = static_cast<double>(hits) / static_cast<double>(sims);
            worst_mc = std::max(worst_mc,
                                std::abs(freq - by_dp) - 4.0 * binomial_sigma(by_dp, sims));
        }
        res.check(worst <= 1e-12, "enumeration equals dp on random trees");
        res.check(worst_mc <= 0.0, "Monte Carlo within 4 sigma of the oracles");
    }
    {
        double worst = 0.0;
        for (int it = 0; it < 30; ++it) {
            WitnessTreeGenOptions opt;
            opt.max_edges = 14;
            opt.boundary_prob = 0.0;
            WitnessTree tree = random_witness_tree(rng, opt);
            const double by_dp = dp_match_probability(tree, BoundaryAssignment::all_unmatched(), C);
            worst = std::max(worst, std::abs(by_dp - 1.0 / C));
        }
        res.check(worst <= 1e-12, "boundary-free trees match with probability exactly 1/C");
    }
    {
        bool ok = true;
        for (int it = 0; it < 20; ++it) {
            WitnessTreeGenOptions opt;
            opt.max_edges = 10;
            opt.max_boundary = 6;
            opt.boundary_prob = 0.5;
            WitnessTree tree = random_witness_tree(rng, opt);
            if (tree.edge_count() > 20) continue;
            const double adaptive = adaptive_min_probability(tree, C);
            const int b = tree.boundary_count();
            for (int mask = 0; mask < (1 << b); ++mask) {
                std::vector<bool> decisions;
                for (int i = 0; i < b; ++i) decisions.push_back((mask >> i) & 1);
                const double fixed =
                    dp_match_probability(tree, BoundaryAssignment::fixed(decisions), C);
                ok = ok && adaptive <= fixed + 1e-12;
            }
        }
        res.check(ok, "adaptive play dominates every fixed boundary assignment");
    }
    {
        bool ok = true;
        for (int it = 0; it < 30; ++it) {
            WitnessTreeGenOptions opt;
            opt.max_edges = 12;
            opt.max_boundary = 8;
            opt.boundary_even_depth_only = true;
            opt.boundary_prob = 0.6;
            WitnessTree tree = random_witness_tree(rng, opt);
            if (tree.edge_count() > 20) continue;
            const double all_un =
                dp_match_probability(tree, BoundaryAssignment::all_unmatched(), C);
            const double adaptive = adaptive_min_probability(tree, C);
            ok = ok && std::abs(all_un - adaptive) <= 1e-12;
            const int b = tree.boundary_count();
            for (int mask = 0; mask < (1 << b); ++mask) {
                std::vector<bool> decisions;
                for (int i = 0; i < b; ++i) decisions.push_back((mask >> i) & 1);
                const double fixed =
                    dp_match_probability(tree, BoundaryAssignment::fixed(decisions), C);
                ok = ok && all_un <= fixed + 1e-12;
            }
        }
        res.check(ok, "all-unmatched minimizes on even-depth boundaries, adaptively too");
    }
    {
        // Perturbing one boundary edge from unmatched to matched moves the
        // root probability with sign (-1)^depth.
        bool ok = true;
        for (int it = 0; it < 20; ++it) {
            WitnessTreeGenOptions opt;
            opt.max_edges = 10;
            opt.max_boundary = 6;
            opt.boundary_prob = 0.5;
            WitnessTree tree = random_witness_tree(rng, opt);
            const int b = tree.boundary_count();
            if (b == 0) continue;
            std::vector<bool> base;
            for (int i = 0; i < b; ++i) base.push_back(rng.next_below(2) == 1);
            std::vector<int> boundary_edges;
            for (int e = 0; e < tree.edge_count(); ++e)
                if (tree.edges[static_cast<std::size_t>(e)].boundary) boundary_edges.push_back(e);
            for (int i = 0; i < b; ++i) {
                std::vector<bool> lo = base, hi = base;
                lo[static_cast<std::size_t>(i)] = false;
                hi[static_cast<std::size_t>(i)] = true;
                const double d = dp_match_probability(tree, BoundaryAssignment::fixed(hi), C) -
                                 dp_match_probability(tree, BoundaryAssignment::fixed(lo), C);
                const int depth = witness_edge_depth(tree, boundary_edges[static_cast<std::size_t>(i)]);
                if (depth % 2 == 0)
                    ok = ok && d >= -1e-12;
                else
                    ok = ok && d <= 1e-12;
            }
        }
        res.check(ok, "boundary influence sign alternates with depth");
    }
    return res;
}

inline SuiteResult sparsifier_suite() {
    SuiteResult res{"sparsifier"};
    {
        // Keep-frequency of a fixed edge of K_201 (200-regular), dp=50.
        const EdgeStream stream = complete_graph_stream(201, 4242);
        const Graph& g = stream.graph();
        const int target = stream.arrival(stream.size() - 1);  // arrives last
        const RandomSource src{555001};
        const long long trials = 3000;
        long long kept = 0;
        int max_kept_degree = 0;
        for (long long t = 0; t < trials; ++t) {
            SubsampleState state(g.vertex_count(), 200, 50);
            bool target_kept = false;
            for (int k = 0; k < stream.size(); ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = g.edge(id);
                const double r = uniform_draw(src, static_cast<std::uint64_t>(t),
                                              static_cast<std::uint64_t>(id));
                if (state.process_edge(id, u, v, r) == SubsampleOutcome::Kept && id == target)
                    target_kept = true;
            }
            for (int v = 0; v < g.vertex_count(); ++v)
                max_kept_degree = std::max(max_kept_degree, state.kept_degree(v));
            kept += target_kept ? 1 : 0;
        }
        const double freq = static_cast<double>(kept) / static_cast<double>(trials);
        const double upper = 50.0 / 200.0;
        const double lower = (1.0 - 5.0 * std::sqrt(std::log(50.0) / 50.0)) * 50.0 / 200.0;
        const double sig = binomial_sigma(freq, trials);
        res.check(freq <= upper + 4.0 * sig && freq >= lower - 4.0 * sig,
                  "keep frequency inside the two-sided band");
        SubsampleState probe(1, 200, 50);
        res.check(std::abs(freq - probe.coin_threshold()) <= 4.0 * sig,
                  "keep frequency matches (1-eta)*dp/delta");
        res.check(max_kept_degree <= 50, "kept degree never exceeds delta_prime");
    }
    {
        // Split marginals on K_41 with dp=10 (T=4).
        const EdgeStream stream = complete_graph_stream(41, 3131);
        const Graph& g = stream.graph();
        const int target = stream.arrival(stream.size() / 2);
        const RandomSource src{555002};
        const long long trials = 20000;
        std::vector<long long> part_hits(5, 0);
        bool partition_ok = true;
        for (long long t = 0; t < trials; ++t) {
            SplitState state(g.vertex_count(), 40, 10);
            long long placed = 0;
            for (int k = 0; k < stream.size(); ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = g.edge(id);
                const double r = uniform_draw(src, static_cast<std::uint64_t>(t),
                                              static_cast<std::uint64_t>(id));
                const SplitOutcome out = state.process_edge(id, u, v, r);
                if (id == target) ++part_hits[static_cast<std::size_t>(out.part)];
            }
            for (const auto& part : state.parts()) placed += static_cast<long long>(part.size());
            partition_ok = partition_ok && placed == stream.size();
        }
        res.check(partition_ok, "parts plus reject partition the stream");
        bool marginal_ok = true;
        for (int p = 1; p <= 4; ++p) {
            const double freq =
                static_cast<double>(part_hits[static_cast<std::size_t>(p)]) / static_cast<double>(trials);
            marginal_ok =
                marginal_ok && std::abs(freq - 0.25) <= 4.0 * binomial_sigma(0.25, trials);
        }
        res.check(marginal_ok, "part marginals are 1/T each");
        res.check(part_hits[0] == 0, "cap rejections absent at these sizes");
    }
    {
        // Locally-treelike frequency under independent p = D/delta sampling.
        const EdgeStream stream = complete_graph_stream(401, 99);
        const Graph& g = stream.graph();
        const int target = 0;
        const double p = 2.0 / 400.0;
        const double bound = 3.0 * std::pow(2.0, 5.0) / 400.0;  // 0.24
        const RandomSource src{555003};
        const long long trials = 1200;
        long long cycles = 0;
        for (long long t = 0; t < trials; ++t) {
            std::vector<Graph::Edge> kept_edges;
            kept_edges.push_back(g.edge(target));  // condition on e kept
            for (int id = 0; id < g.edge_count(); ++id) {
                if (id == target) continue;
                if (uniform_draw(src, static_cast<std::uint64_t>(t),
                                 static_cast<std::uint64_t>(id)) < p)
                    kept_edges.push_back(g.edge(id));
            }
            Graph kept(g.vertex_count(), kept_edges, g.vertex_count() - 1);
            cycles += neighborhood_has_cycle(kept, 0, 1) ? 1 : 0;
        }
        const double freq = static_cast<double>(cycles) / static_cast<double>(trials);
        res.check(freq <= bound + 4.0 * binomial_sigma(bound, trials),
                  "cycle frequency below 3*D^(5g)/delta");
    }
    return res;
}

inline SuiteResult tree_exact_suite() {
    SuiteResult res{"tree-exact"};
    const double C = 8.0 + 2.0 * std::sqrt(8.0) + 1.0;
    LocalRng rng(1337);
    double worst = 0.0;
    long long hits = 0, runs = 0;
    const RandomSource src{424242};
    for (int it = 0; it < 12; ++it) {
        const int n = 20 + static_cast<int>(rng.next_below(101));
        const EdgeStream stream = random_tree_stream_capped(n, 8, sublabel(99, static_cast<std::uint64_t>(it)));
        const Graph& g = stream.graph();
        for (int id = 0; id < g.edge_count(); ++id) {
            auto tree = build_witness_tree(stream, id, n);
            if (!tree) {
                res.check(false, "tree stream produced a cyclic neighborhood");
                return res;
            }
            const double by_dp =
                dp_match_probability(*tree, BoundaryAssignment::all_unmatched(), C);
            worst = std::max(worst, std::abs(by_dp - 1.0 / C));
        }
        const int designated = g.edge_count() / 2;
        const long long sims = 25000;
        for (long long s = 0; s < sims; ++s) {
            MatcherState m(g.vertex_count(), C, 8);
            bool matched = false;
            const std::uint64_t inst =
                sublabel(static_cast<std::uint64_t>(it) * 1000003ULL, static_cast<std::uint64_t>(s));
            for (int k = 0; k < stream.size(); ++k) {
                const int id = stream.arrival(k);
                auto [u, v] = g.edge(id);
                const MatchOutcome out =
                    m.process_edge(id, u, v, uniform_draw(src, inst, static_cast<std::uint64_t>(id)));
                if (id == designated && out == MatchOutcome::Matched) matched = true;
            }
            hits += matched ? 1 : 0;
            ++runs;
        }
    }
    res.check(worst <= 1e-12, "dp oracle gives exactly 1/C on every tree edge");
    const double freq = static_cast<double>(hits) / static_cast<double>(runs);
    res.check(std::abs(freq - 1.0 / C) <= 4.0 * binomial_sigma(1.0 / C, runs),
              "pooled matcher frequency within 4 sigma of 1/C");
    return res;
}

inline SuiteResult witness_equivalence_suite() {
    SuiteResult res{"witness-equivalence"};
    bool ok = true;
    LocalRng rng(7117);
    for (int it = 0; it < 300; ++it) {
        const EdgeStream stream =
            random_bounded_graph_stream(50, 6, 100, sublabel(31337, static_cast<std::uint64_t>(it)));
        if (stream.size() == 0) continue;
        const int target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(stream.size())));
        const RandomSource src{static_cast<std::uint64_t>(1000 + it)};
        ok = ok && witness_equivalence_check(stream, target, 12.0, src,
                                             static_cast<std::uint64_t>(it));
    }
    res.check(ok, "matcher outcome identical on witness-only substream");
    return res;
}

} // namespace suites

inline SuiteResult verify_suite(const std::string& name) {
    if (name == "recurrence") return suites::recurrence_suite();
    if (name == "game") return suites::game_suite();
    if (name == "sparsifier") return suites::sparsifier_suite();
    if (name == "tree-exact") return suites::tree_exact_suite();
    if (name == "witness-equivalence") return suites::witness_equivalence_suite();
    throw std::invalid_argument("unknown verify suite: " + name);
}

inline std::vector<std::string> verify_suite_names() {
    return {"recurrence", "game", "sparsifier", "tree-exact", "witness-equivalence"};
}

} // namespace olec

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace olec {

inline constexpr double kEulerRatio = 1.5819767068693265;  // e/(e-1)

// Parameters of the error-contraction analysis. lambda = ln(C/(C-delta_cap))
// is the per-level multiplier; errors contract once lambda < 1, i.e.
// C > e/(e-1)*delta_cap.
struct RecurrenceParams {
    double C;
    int delta_cap;
    double delta;
    double lambda;

    RecurrenceParams(double C_, int delta_cap_, double delta_)
        : C(C_), delta_cap(delta_cap_), delta(delta_) {
        if (!(C > static_cast<double>(delta_cap)))
            throw std::invalid_argument("RecurrenceParams: requires C > delta_cap");
        if (!(delta > 0.0 && delta < 0.5))
            throw std::invalid_argument("RecurrenceParams: requires delta in (0, 1/2)");
        lambda = std::log(C / (C - static_cast<double>(delta_cap)));
    }
};

// Level-indexed envelopes on the error terms: eps_min in [-2,0],
// eps_max in [0,1], level 0 at the boundary.
struct ErrorProfile {
    std::vector<double> eps_min;
    std::vector<double> eps_max;
    int levels;
};

// One step of the not-matched-from-below recurrence:
//   q_v = prod_i (1 - C/((C-(offset+i-1))*(C-c_i)) * q_i)
// with children listed in arrival order and i starting at offset+1.
struct ChildTerm {
    double q;
    int children;  // child's own child count c_i
};

inline double q_step(double C, int parent_offset, const std::vector<ChildTerm>& children) {
    double q = 1.0;
    int i = parent_offset + 1;
    for (const auto& child : children) {
        if (!(child.q >= 0.0 && child.q <= 1.0))
            throw std::domain_error("q_step: child q outside [0,1]");
        const double parent_factor = C - static_cast<double>(i - 1);
        const double child_factor = C - static_cast<double>(child.children);
        if (!(parent_factor > 0.0) || !(child_factor > 0.0))
            throw std::domain_error("q_step: nonpositive denominator");
        q *= 1.0 - C / (parent_factor * child_factor) * child.q;
        ++i;
    }
    return q;
}

// Error-term form of the same recurrence: eps = 1 - prod_i (1 + eps_i/(C-i)).
inline double eps_step(double C, const std::vector<double>& children_eps) {
    const int k = static_cast<int>(children_eps.size());
    if (!(C > static_cast<double>(k)))
        throw std::domain_error("eps_step: requires C > number of children");
    double prod = 1.0;
    for (int i = 1; i <= k; ++i)
        prod *= 1.0 + children_eps[static_cast<std::size_t>(i - 1)] / (C - static_cast<double>(i));
    return 1.0 - prod;
}

inline double f_delta(double delta, double x) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::domain_error("f_delta: requires delta in [0,1)");
    return 1.0 - std::exp((1.0 - delta) * x);
}

// Iterates the single-level envelope bounds from the worst-case boundary
// (eps_max = 1, eps_min = -2), clamping each level into the ranges the
// envelopes satisfy by construction.
inline ErrorProfile envelope_iterate(const RecurrenceParams& params, int g) {
    if (g < 0) throw std::invalid_argument("envelope_iterate: negative depth");
    if (!(params.C >= kEulerRatio * static_cast<double>(params.delta_cap)))
        throw std::invalid_argument("envelope_iterate: requires C >= e/(e-1)*delta_cap");
    if (params.delta_cap < 25)
        throw std::invalid_argument("envelope_iterate: requires delta_cap >= 25");
    ErrorProfile profile;
    profile.levels = g;
    profile.eps_min.resize(static_cast<std::size_t>(g) + 1);
    profile.eps_max.resize(static_cast<std::size_t>(g) + 1);
    profile.eps_min[0] = -2.0;
    profile.eps_max[0] = 1.0;
    const double noise = 100.0 / params.C;
    for (int l = 0; l < g; ++l) {
        const double lo = 1.0 - (1.0 + noise) * std::exp(params.lambda * profile.eps_max[static_cast<std::size_t>(l)]);
        const double hi = 1.0 - (1.0 - noise) * std::exp(params.lambda * profile.eps_min[static_cast<std::size_t>(l)]);
        profile.eps_min[static_cast<std::size_t>(l) + 1] = std::clamp(lo, -2.0, 0.0);
        profile.eps_max[static_cast<std::size_t>(l) + 1] = std::clamp(hi, 0.0, 1.0);
    }
    return profile;
}

// The unique C with ln(C/(C-delta_prime)) = 1.
inline double critical_C(int delta_prime) {
    if (delta_prime < 1) throw std::invalid_argument("critical_C: delta_prime >= 1");
    return kEulerRatio * static_cast<double>(delta_prime);
}

// Nonzero period-2 fixed point of g(x) = 1 - exp(lambda*x), found by
// bisection on [1e-6, 1]. Exists exactly when lambda > 1 (the composed map
// has slope lambda^2 at the origin); returns nullopt for lambda <= 1.
inline std::optional<double> period2_fixed_point(double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("period2_fixed_point: lambda must be > 0");
    if (lambda <= 1.0) return std::nullopt;
    auto gg_minus_id = [lambda](double x) {
        const double gx = 1.0 - std::exp(lambda * x);
        return 1.0 - std::exp(lambda * gx) - x;
    };
    double lo = 1e-6, hi = 1.0;
    if (!(gg_minus_id(lo) > 0.0) || !(gg_minus_id(hi) < 0.0))
        return std::nullopt;  // no bracket; lambda barely above 1
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (gg_minus_id(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Checks the two-step contraction f_delta(f_delta(eps)) <= (1-delta)*eps
// up to an absolute tolerance.
inline bool f_contraction_check(double delta, double eps) {
    if (!(delta >= 0.0 && delta < 0.5))
        throw std::domain_error("f_contraction_check: delta in [0, 1/2)");
    if (!(eps >= 0.0)) throw std::domain_error("f_contraction_check: eps >= 0");
    return f_delta(delta, f_delta(delta, eps)) <= (1.0 - delta) * eps + 1e-12;
}

// |sum_{i=1..delta_cap} 1/(C-i) - ln(C/(C-delta_cap))|; at most 5/C for the
// sampling parameters in play (C at least a constant factor above delta_cap).
inline double riemann_gap(double C, int delta_cap) {
    if (!(C >= static_cast<double>(delta_cap) + 1.0))
        throw std::domain_error("riemann_gap: requires C >= delta_cap + 1");
    double sum = 0.0;
    for (int i = 1; i <= delta_cap; ++i) sum += 1.0 / (C - static_cast<double>(i));
    return std::abs(sum - std::log(C / (C - static_cast<double>(delta_cap))));
}

// Asymptotic parameter plan: delta = A*(ln ln Delta)^2 / ln Delta,
// delta_prime = 1e6 * delta^-3, g = (100/delta)*ln(100/delta),
// C = (e/(e-1)+delta)*delta_prime. bounds_ok reports whether all four error
// terms fall below delta/10; at any feasible Delta they do not, and the
// planner says so rather than pretending otherwise.
struct PlannerOutput {
    double delta = 0.0;
    double delta_prime = 0.0;
    double g = 0.0;
    double C = 0.0;
    bool bounds_ok = false;
    // Natural logs of the four bound terms (subsample slack, treelike
    // failure, decay term, recurrence noise), comparable against ln(delta/10).
    double log_terms[4] = {0, 0, 0, 0};
    double log_budget = 0.0;
    double A = 0.0;
};

// Diagnostic entry: evaluates the plan at an explicit delta with no
// clamping, so out-of-range deltas can still be inspected.
inline PlannerOutput plan_for_delta(double delta, double delta_big) {
    PlannerOutput out;
    out.delta = delta;
    out.delta_prime = 1e6 / (delta * delta * delta);
    out.g = (100.0 / delta) * std::log(100.0 / delta);
    out.C = (kEulerRatio + delta) * out.delta_prime;
    const double log_dp = std::log(out.delta_prime);
    out.log_terms[0] = std::log(5.0) + 0.5 * (std::log(log_dp) - log_dp);
    out.log_terms[1] = std::log(3.0) + 5.0 * out.g * log_dp - std::log(delta_big);
    out.log_terms[2] = 0.5 * (out.g - 1.0) * std::log1p(-delta / 4.0);
    out.log_terms[3] = std::log(1e4) - std::log(delta * out.C);
    out.log_budget = std::log(delta / 10.0);
    out.bounds_ok = true;
    for (double t : out.log_terms)
        if (!(t <= out.log_budget)) out.bounds_ok = false;
    return out;
}

// When A is not fixed by the caller, scans a grid for the smallest A whose
// plan satisfies the bounds; if none does (the case at every desk-scale
// Delta), reports the A = 1 plan with bounds_ok = false.
inline PlannerOutput plan_parameters(long long delta_big, long long n,
                                     std::optional<double> A = std::nullopt) {
    if (delta_big < 3 || n < 3)
        throw std::invalid_argument("plan_parameters: requires delta >= 3, n >= 3");
    const double lnD = std::log(static_cast<double>(delta_big));
    const double base = std::pow(std::log(lnD), 2.0) / lnD;  // (ln ln Delta)^2 / ln Delta
    (void)n;
    auto plan_for = [&](double a) {
        double delta = a * base;
        // The guarantee regime needs delta in (0, 1/20); clamp and report honestly.
        delta = std::min(delta, 0.05 - 1e-12);
        PlannerOutput out = plan_for_delta(delta, static_cast<double>(delta_big));
        out.A = a;
        return out;
    };
    if (A) return plan_for(*A);
    for (double a = 0.05; a <= 64.0; a *= 1.25) {
        PlannerOutput out = plan_for(a);
        if (out.bounds_ok) return out;
    }
    return plan_for(1.0);
}

} // namespace olec

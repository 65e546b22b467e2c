#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace olec {

// Binomial frequency with a 4-sigma normal band; the universal statistical
// acceptance gate (per-check false alarm rate about 6e-5).
struct BinomialBand {
    double freq = 0.0;
    double sigma = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

inline BinomialBand binomial_band4(long long successes, long long trials) {
    BinomialBand b;
    if (trials <= 0) return b;
    b.freq = static_cast<double>(successes) / static_cast<double>(trials);
    b.sigma = std::sqrt(std::max(b.freq * (1.0 - b.freq), 1e-300) /
                        static_cast<double>(trials));
    b.lo = b.freq - 4.0 * b.sigma;
    b.hi = b.freq + 4.0 * b.sigma;
    return b;
}

// Sigma for a hypothesized success probability p (used when checking an
// observed frequency against a known target).
inline double binomial_sigma(double p, long long trials) {
    return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
}

inline bool within_band(double observed, double target, double slack) {
    return observed >= target - slack && observed <= target + slack;
}

// Deterministic float formatting for reports.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

} // namespace olec

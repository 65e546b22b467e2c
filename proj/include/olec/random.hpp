#pragma once

#include <cstdint>

namespace olec {

// Stateless counter-based randomness. Every draw is addressed by
// (seed, instance, edge_index), so deleting or reordering other draws can
// never shift the value an address maps to. Experiments that must be
// replayable (and coupling arguments that delete edges from a stream)
// rely on this.
namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

struct RandomSource {
    std::uint64_t seed = 0;
};

// Uniform double in [0,1) with 53-bit granularity, a pure function of
// (seed, instance, edge_index).
inline double uniform_draw(const RandomSource& src, std::uint64_t instance,
                           std::uint64_t edge_index) {
    std::uint64_t h = detail::mix64(src.seed ^ 0x6a09e667f3bcc908ULL);
    h = detail::mix64(h ^ detail::mix64(instance));
    h = detail::mix64(h ^ detail::mix64(edge_index + 0x243f6a8885a308d3ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Derives a fresh instance label from a base label and a sub-index, so each
// round/trial/stage of a composite experiment owns a disjoint address space.
inline std::uint64_t sublabel(std::uint64_t base, std::uint64_t sub) {
    return detail::mix64(base * 0x9e3779b97f4a7c15ULL + detail::mix64(sub) + 1);
}

// Small deterministic sequential generator for graph construction
// (shuffles, attachment choices). Not addressed; used only where the
// generated object itself is the reproducible artifact.
class LocalRng {
public:
    explicit LocalRng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return detail::mix64(state_);
    }

    // Uniform in [0, bound) by rejection; bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ULL - (~0ULL % bound + 1) % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x > limit);
        return x % bound;
    }

    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    template <class Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace olec

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "olec/graph.hpp"
#include "olec/random.hpp"

namespace olec {

enum class OrderMode { AsGenerated, UniformlyRandom };

struct GeneratorSpec {
    enum class Kind { RandomRegular, RandomTree, CompleteDaryTree, Path, Star, ErdosRenyi };
    Kind kind = Kind::RandomTree;
    int n = 0;
    int d = 0;          // degree (random-regular) or arity (d-ary tree)
    int depth = 0;      // d-ary tree depth
    double p = 0.0;     // erdos-renyi edge probability
    OrderMode order_mode = OrderMode::AsGenerated;
};

namespace detail {

inline std::uint64_t pair_key(int u, int v) {
    return (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
           static_cast<std::uint32_t>(std::max(u, v));
}

// Configuration model: pair up d stubs per vertex, then repair self-loops
// and parallel edges by random 2-swaps, which preserves the degree sequence.
inline std::vector<Graph::Edge> random_regular_edges(int n, int d, LocalRng& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    rng.shuffle(stubs);

    const std::size_t m = stubs.size() / 2;
    auto u_of = [&](std::size_t i) -> int& { return stubs[2 * i]; };
    auto v_of = [&](std::size_t i) -> int& { return stubs[2 * i + 1]; };

    // present holds the keys of pairs that are currently valid simple edges;
    // bad pairs (self-loops and surplus copies of a duplicated key) own no key.
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    std::vector<char> is_bad(m, 0);
    std::vector<std::size_t> worklist;
    for (std::size_t i = 0; i < m; ++i) {
        if (u_of(i) == v_of(i) || !present.insert(pair_key(u_of(i), v_of(i))).second) {
            is_bad[i] = 1;
            worklist.push_back(i);
        }
    }
    std::size_t guard = 0;
    const std::size_t guard_limit = 400 * m + 100000;
    while (!worklist.empty()) {
        if (++guard > guard_limit)
            throw std::runtime_error("random-regular: repair did not converge; spec infeasible?");
        std::size_t i = worklist.back();
        std::size_t j = static_cast<std::size_t>(rng.next_below(m));
        if (j == i) continue;
        const int a = u_of(i), b = v_of(i), c = u_of(j), e = v_of(j);
        // Candidate rewiring: (a,e) and (c,b).
        if (a == e || c == b) continue;
        if (pair_key(a, e) == pair_key(c, b)) continue;
        if (present.count(pair_key(a, e)) || present.count(pair_key(c, b))) continue;
        if (!is_bad[j]) present.erase(pair_key(c, e));
        present.insert(pair_key(a, e));
        present.insert(pair_key(c, b));
        v_of(i) = e;
        v_of(j) = b;
        worklist.pop_back();
        is_bad[i] = 0;
        if (is_bad[j]) {
            is_bad[j] = 0;
            worklist.erase(std::remove(worklist.begin(), worklist.end(), j), worklist.end());
        }
    }
    std::vector<Graph::Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) edges.push_back({u_of(i), v_of(i)});
    return edges;
}

} // namespace detail

// Builds the graph for a spec and wraps it in an arrival order. Infeasible
// specs are rejected with an explanation.
inline EdgeStream generate(const GeneratorSpec& spec, std::uint64_t seed) {
    using Kind = GeneratorSpec::Kind;
    LocalRng rng(detail::mix64(seed ^ 0x67656e65726174ULL));

    int n = spec.n;
    std::vector<Graph::Edge> edges;
    int delta = 0;

    switch (spec.kind) {
        case Kind::RandomRegular: {
            if (n < 1) throw std::invalid_argument("random-regular: n must be >= 1");
            if (spec.d < 1 || spec.d >= n)
                throw std::invalid_argument("random-regular: need 1 <= d < n");
            if ((static_cast<long long>(n) * spec.d) % 2 != 0)
                throw std::invalid_argument("random-regular: n*d must be even");
            edges = detail::random_regular_edges(n, spec.d, rng);
            delta = spec.d;
            break;
        }
        case Kind::RandomTree: {
            if (n < 1) throw std::invalid_argument("random-tree: n must be >= 1");
            // Uniform attachment: vertex i joins a uniformly random earlier vertex.
            for (int i = 1; i < n; ++i)
                edges.push_back({static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i))),
                                 i});
            break;
        }
        case Kind::CompleteDaryTree: {
            if (spec.d < 1) throw std::invalid_argument("complete-d-ary-tree: d must be >= 1");
            if (spec.depth < 0) throw std::invalid_argument("complete-d-ary-tree: depth >= 0");
            // Vertices laid out level by level; children of x are d*x+1 .. d*x+d.
            long long count = 1, level = 1;
            for (int l = 0; l < spec.depth; ++l) {
                level *= spec.d;
                count += level;
                if (count > 10'000'000) throw std::invalid_argument("complete-d-ary-tree: too large");
            }
            n = static_cast<int>(count);
            for (int child = 1; child < n; ++child)
                edges.push_back({(child - 1) / spec.d, child});
            break;
        }
        case Kind::Path: {
            if (n < 1) throw std::invalid_argument("path: n must be >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            break;
        }
        case Kind::Star: {
            if (n < 1) throw std::invalid_argument("star: n must be >= 1");
            for (int i = 1; i < n; ++i) edges.push_back({0, i});
            break;
        }
        case Kind::ErdosRenyi: {
            if (n < 1) throw std::invalid_argument("erdos-renyi: n must be >= 1");
            if (spec.p < 0.0 || spec.p > 1.0)
                throw std::invalid_argument("erdos-renyi: p must be in [0,1]");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.next_double() < spec.p) edges.push_back({u, v});
            break;
        }
    }

    if (delta == 0) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : edges) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        delta = 1;
        for (int d : deg) delta = std::max(delta, d);
    }

    Graph graph(n, std::move(edges), delta);
    std::vector<int> order(static_cast<std::size_t>(graph.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    if (spec.order_mode == OrderMode::UniformlyRandom) {
        LocalRng order_rng(detail::mix64(seed ^ 0x6f726465726d6fULL));
        order_rng.shuffle(order);
    }
    return EdgeStream(std::move(graph), std::move(order));
}

} // namespace olec

#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "olec/game.hpp"
#include "olec/generate.hpp"
#include "olec/graph.hpp"
#include "olec/random.hpp"

namespace olec {

// Random instance builders used by the verification suites and experiments.

struct WitnessTreeGenOptions {
    int max_edges = 12;
    int max_children = 3;
    int max_depth = 4;
    double boundary_prob = 0.35;   // chance a childless edge becomes boundary
    bool boundary_even_depth_only = false;
    int max_boundary = 10;
};

// Random witness tree with a random arrival order consistent with the
// child-before-parent constraint. Edge depth counts edges from the root
// edge, so edges at the root endpoints have depth 1.
inline WitnessTree random_witness_tree(LocalRng& rng, const WitnessTreeGenOptions& opt) {
    WitnessTree tree;
    tree.nodes.resize(2);
    struct Pending {
        int node;
        int depth;  // depth of edges hanging off this node
    };
    std::vector<Pending> frontier{{0, 1}, {1, 1}};
    int boundary_left = opt.max_boundary;
    while (!frontier.empty() && tree.edge_count() < opt.max_edges) {
        const std::size_t pick = static_cast<std::size_t>(rng.next_below(frontier.size()));
        Pending cur = frontier[pick];
        frontier.erase(frontier.begin() + static_cast<long>(pick));
        if (cur.depth > opt.max_depth) continue;
        const int budget = opt.max_edges - tree.edge_count();
        int children = static_cast<int>(rng.next_below(
            static_cast<std::uint64_t>(std::min(opt.max_children, budget) + 1)));
        for (int c = 0; c < children && tree.edge_count() < opt.max_edges; ++c) {
            const bool depth_allows_boundary =
                !opt.boundary_even_depth_only || cur.depth % 2 == 0;
            const bool make_boundary = depth_allows_boundary && boundary_left > 0 &&
                                       rng.next_double() < opt.boundary_prob;
            WitnessTree::EdgeRec rec;
            rec.parent_node = cur.node;
            rec.rank = 0;  // assigned below
            if (make_boundary) {
                rec.boundary = true;
                rec.child_node = -1;
                --boundary_left;
                tree.nodes[static_cast<std::size_t>(cur.node)].child_edges.push_back(
                    tree.edge_count());
                tree.edges.push_back(rec);
            } else {
                const int node = static_cast<int>(tree.nodes.size());
                rec.boundary = false;
                rec.child_node = node;
                const int eid = tree.edge_count();
                tree.nodes[static_cast<std::size_t>(cur.node)].child_edges.push_back(eid);
                tree.edges.push_back(rec);
                tree.nodes.push_back({eid, {}});
                frontier.push_back({node, cur.depth + 1});
            }
        }
    }
    tree.depth = opt.max_depth;

    // Random linear extension: place an edge once all its child edges are
    // placed, picking uniformly among the ready ones.
    std::vector<int> ready;
    for (std::size_t i = 0; i < tree.edges.size(); ++i) {
        const auto& rec = tree.edges[i];
        const int kids = rec.boundary
                             ? 0
                             : static_cast<int>(tree.nodes[static_cast<std::size_t>(rec.child_node)]
                                                    .child_edges.size());
        if (kids == 0) ready.push_back(static_cast<int>(i));
    }
    long long next_rank = 0;
    std::vector<int> placed_children(tree.edges.size(), 0);
    while (!ready.empty()) {
        const std::size_t pick = static_cast<std::size_t>(rng.next_below(ready.size()));
        const int eid = ready[pick];
        ready.erase(ready.begin() + static_cast<long>(pick));
        tree.edges[static_cast<std::size_t>(eid)].rank = next_rank++;
        const int parent_edge =
            tree.nodes[static_cast<std::size_t>(
                           tree.edges[static_cast<std::size_t>(eid)].parent_node)]
                .parent_edge;
        if (parent_edge >= 0) {
            const auto& parent_node =
                tree.nodes[static_cast<std::size_t>(
                    tree.edges[static_cast<std::size_t>(parent_edge)].child_node)];
            if (++placed_children[static_cast<std::size_t>(parent_edge)] ==
                static_cast<int>(parent_node.child_edges.size()))
                ready.push_back(parent_edge);
        }
    }
    for (auto& node : tree.nodes) {
        std::sort(node.child_edges.begin(), node.child_edges.end(), [&](int a, int b) {
            return tree.edges[static_cast<std::size_t>(a)].rank <
                   tree.edges[static_cast<std::size_t>(b)].rank;
        });
    }
    tree.validate();
    return tree;
}

// Random tree stream with max degree at most `cap`, declared delta = cap,
// uniformly random arrival order. Resamples the library generator until the
// cap holds.
inline EdgeStream random_tree_stream_capped(int n, int cap, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 4000; ++attempt) {
        const EdgeStream s = generate({GeneratorSpec::Kind::RandomTree, n, 0, 0, 0.0,
                                       OrderMode::AsGenerated},
                                      sublabel(seed, attempt));
        if (s.graph().max_degree() > cap) continue;
        Graph g(n, s.graph().edges(), cap);
        std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        LocalRng rng(sublabel(seed, 1000000 + attempt));
        rng.shuffle(order);
        return EdgeStream(std::move(g), std::move(order));
    }
    throw std::runtime_error("random_tree_stream_capped: cap too tight for n");
}

// Random graph with all degrees <= max_degree, built by rejection over
// uniformly sampled vertex pairs; declared delta = max_degree.
inline EdgeStream random_bounded_graph_stream(int n, int max_degree, int target_edges,
                                              std::uint64_t seed) {
    LocalRng rng(sublabel(seed, 0xB09DEDULL));
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::unordered_set<std::uint64_t> present;
    std::vector<Graph::Edge> edges;
    long long attempts = static_cast<long long>(target_edges) * 60 + 1000;
    while (static_cast<int>(edges.size()) < target_edges && attempts-- > 0) {
        const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (deg[static_cast<std::size_t>(u)] >= max_degree ||
            deg[static_cast<std::size_t>(v)] >= max_degree)
            continue;
        const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                                  static_cast<std::uint32_t>(std::max(u, v));
        if (!present.insert(key).second) continue;
        edges.push_back({u, v});
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    Graph g(n, std::move(edges), max_degree);
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    LocalRng order_rng(sublabel(seed, 0x0DDE5ULL));
    order_rng.shuffle(order);
    return EdgeStream(std::move(g), std::move(order));
}

// Complete graph K_n (the canonical (n-1)-regular instance).
inline EdgeStream complete_graph_stream(int n, std::uint64_t seed, bool shuffle_order = true) {
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    Graph g(n, std::move(edges), n - 1);
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (shuffle_order) {
        LocalRng rng(sublabel(seed, 0xC03B1E7EULL));
        rng.shuffle(order);
    }
    return EdgeStream(std::move(g), std::move(order));
}

} // namespace olec

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "olec/graph.hpp"
#include "olec/matcher.hpp"
#include "olec/random.hpp"

namespace olec {

// Witness tree of a target edge e = (u,v): the edges of the acyclic
// g-neighborhood that arrive before everything strictly above them and are
// connected to e through such edges. Nodes 0 and 1 are the endpoints of the
// root edge, which is processed last. Boundary edges cross the radius-g
// frontier; their outside endpoints are treated as fresh vertices and are
// not materialized (child_node = -1).
struct WitnessTree {
    struct Node {
        int parent_edge = -1;            // -1 for the two root nodes
        std::vector<int> child_edges;    // sorted by arrival rank
    };
    struct EdgeRec {
        int parent_node;                 // endpoint closer to the root edge
        int child_node;                  // -1 for boundary edges
        long long rank;                  // arrival position; root edge ranks last
        bool boundary = false;
    };

    std::vector<Node> nodes;             // [0] = u side, [1] = v side
    std::vector<EdgeRec> edges;
    int depth = 0;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int boundary_count() const {
        int b = 0;
        for (const auto& e : edges) b += e.boundary ? 1 : 0;
        return b;
    }
    int children_of(int node) const {
        return static_cast<int>(nodes[static_cast<std::size_t>(node)].child_edges.size());
    }

    // Edge ids in arrival order (all arrive before the implicit root edge).
    std::vector<int> arrival_sequence() const {
        std::vector<int> seq(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) seq[i] = static_cast<int>(i);
        std::sort(seq.begin(), seq.end(), [&](int a, int b) {
            return edges[static_cast<std::size_t>(a)].rank < edges[static_cast<std::size_t>(b)].rank;
        });
        return seq;
    }

    void validate() const {
        for (const auto& e : edges) {
            if (e.boundary && e.child_node >= 0)
                throw std::invalid_argument("witness tree: boundary edge with a child node");
            if (!e.boundary && e.child_node < 0)
                throw std::invalid_argument("witness tree: internal edge without child node");
            if (!e.boundary) {
                const auto& child = nodes[static_cast<std::size_t>(e.child_node)];
                for (int ce : child.child_edges) {
                    if (!(edges[static_cast<std::size_t>(ce)].rank < e.rank))
                        throw std::invalid_argument(
                            "witness tree: edge arrives after its parent edge");
                }
            }
        }
        for (int root = 0; root < 2 && root < static_cast<int>(nodes.size()); ++root)
            if (nodes[static_cast<std::size_t>(root)].parent_edge != -1)
                throw std::invalid_argument("witness tree: root node with a parent edge");
    }
};

// Per-boundary-edge decisions for the matching game.
struct BoundaryAssignment {
    enum class Strategy { AllUnmatched, AllMatched, Fixed };
    Strategy strategy = Strategy::AllUnmatched;
    // For Fixed: matched[i] applies to the i-th boundary edge in edge-id order.
    std::vector<bool> matched;

    static BoundaryAssignment all_unmatched() { return {}; }
    static BoundaryAssignment all_matched() {
        return {Strategy::AllMatched, {}};
    }
    static BoundaryAssignment fixed(std::vector<bool> m) {
        return {Strategy::Fixed, std::move(m)};
    }

    bool decision(int boundary_index) const {
        switch (strategy) {
            case Strategy::AllUnmatched: return false;
            case Strategy::AllMatched: return true;
            case Strategy::Fixed: return matched.at(static_cast<std::size_t>(boundary_index));
        }
        return false;
    }
};

namespace detail {

// boundary_index[edge] = position among boundary edges (edge-id order), else -1.
inline std::vector<int> boundary_indices(const WitnessTree& tree) {
    std::vector<int> idx(tree.edges.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < tree.edges.size(); ++i)
        if (tree.edges[i].boundary) idx[i] = next++;
    return idx;
}

} // namespace detail

// Builds the witness tree of edge `edge_id` for radius g, or nullopt when
// the g-neighborhood contains a cycle.
inline std::optional<WitnessTree> build_witness_tree(const EdgeStream& stream, int edge_id,
                                                     int g) {
    const Graph& graph = stream.graph();
    if (edge_id < 0 || edge_id >= graph.edge_count())
        throw std::invalid_argument("build_witness_tree: edge not in graph");
    if (g < 0) throw std::invalid_argument("build_witness_tree: negative radius");
    if (neighborhood_has_cycle(graph, edge_id, g)) return std::nullopt;

    const std::vector<int> rank = stream.arrival_rank();
    auto [u, v] = graph.edge(edge_id);

    // Multi-source BFS distances out to g+1 (to see frontier-crossing edges).
    std::vector<int> dist(static_cast<std::size_t>(graph.vertex_count()), -1);
    std::queue<int> bfs;
    dist[static_cast<std::size_t>(u)] = 0;
    dist[static_cast<std::size_t>(v)] = 0;
    bfs.push(u);
    bfs.push(v);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        if (dist[static_cast<std::size_t>(x)] > g) continue;
        for (const auto& inc : graph.incident(x)) {
            if (dist[static_cast<std::size_t>(inc.neighbor)] < 0) {
                dist[static_cast<std::size_t>(inc.neighbor)] =
                    dist[static_cast<std::size_t>(x)] + 1;
                bfs.push(inc.neighbor);
            }
        }
    }

    WitnessTree tree;
    tree.depth = g;
    tree.nodes.resize(2);

    // DFS over alive chains: an edge joins the tree iff its rank is below its
    // parent edge's rank (the root edge acting as rank infinity).
    struct Frame {
        int vertex;
        int node;
        int via_edge;
        long long parent_rank;
    };
    std::vector<Frame> stack;
    const long long root_rank = static_cast<long long>(rank[static_cast<std::size_t>(edge_id)]);
    stack.push_back({u, 0, edge_id, root_rank});
    stack.push_back({v, 1, edge_id, root_rank});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const int dx = dist[static_cast<std::size_t>(f.vertex)];
        for (const auto& inc : graph.incident(f.vertex)) {
            if (inc.edge_id == f.via_edge) continue;
            const int dy = dist[static_cast<std::size_t>(inc.neighbor)];
            if (dy != dx + 1) continue;  // acyclic ball: other edges only go downward
            const long long r = rank[static_cast<std::size_t>(inc.edge_id)];
            if (r >= f.parent_rank) continue;  // dead edge; its subtree is ignored
            WitnessTree::EdgeRec rec;
            rec.parent_node = f.node;
            rec.rank = r;
            if (dy > g) {
                rec.boundary = true;
                rec.child_node = -1;
                tree.nodes[static_cast<std::size_t>(f.node)].child_edges.push_back(
                    tree.edge_count());
                tree.edges.push_back(rec);
            } else {
                const int child_node = static_cast<int>(tree.nodes.size());
                rec.boundary = false;
                rec.child_node = child_node;
                const int rec_id = tree.edge_count();
                tree.nodes[static_cast<std::size_t>(f.node)].child_edges.push_back(rec_id);
                tree.edges.push_back(rec);
                tree.nodes.push_back({rec_id, {}});
                stack.push_back({inc.neighbor, child_node, inc.edge_id, r});
            }
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

// Bottom-up product-form value of the game under fixed boundary decisions.
// Exact for any tree size; agrees with the enumeration oracle to 1e-12.
inline double dp_match_probability(const WitnessTree& tree, const BoundaryAssignment& boundary,
                                   double C) {
    const std::vector<int> bidx = detail::boundary_indices(tree);

    // q[node]: probability the node is not matched from below. Children are
    // processed in arrival order; a child edge occupies one degree slot at
    // the parent whether it is internal or boundary.
    std::vector<double> q(tree.nodes.size(), 1.0);
    // Nodes were appended during a top-down DFS, so reverse index order is a
    // valid bottom-up order.
    for (int node = static_cast<int>(tree.nodes.size()) - 1; node >= 0; --node) {
        double acc = 1.0;
        int slot = 0;
        for (int eid : tree.nodes[static_cast<std::size_t>(node)].child_edges) {
            const auto& rec = tree.edges[static_cast<std::size_t>(eid)];
            if (rec.boundary) {
                if (boundary.decision(bidx[static_cast<std::size_t>(eid)])) acc = 0.0;
                // unmatched boundary edges contribute factor 1
            } else {
                const double c_child = static_cast<double>(tree.children_of(rec.child_node));
                const double parent_factor = C - static_cast<double>(slot);
                const double child_factor = C - c_child;
                if (!(parent_factor > 0.0) || !(child_factor > 0.0))
                    throw std::domain_error("dp_match_probability: C too small for tree");
                acc *= 1.0 - C / (parent_factor * child_factor) *
                                 q[static_cast<std::size_t>(rec.child_node)];
            }
            ++slot;
        }
        q[static_cast<std::size_t>(node)] = acc;
    }

    const double cu = static_cast<double>(tree.children_of(0));
    const double cv = static_cast<double>(tree.children_of(1));
    if (!(C > cu && C > cv))
        throw std::domain_error("dp_match_probability: C too small for root degrees");
    return q[0] * q[1] * C / ((C - cu) * (C - cv));
}

namespace detail {

struct GameEngine {
    const WitnessTree& tree;
    double C;
    const std::vector<int> order;       // edge ids in arrival order
    const std::vector<int> bidx;
    std::vector<char> matched;          // per node
    std::vector<int> degree;            // per node, arrivals seen so far
    const BoundaryAssignment* boundary; // null in adaptive mode

    GameEngine(const WitnessTree& t, double C_, const BoundaryAssignment* b)
        : tree(t), C(C_), order(t.arrival_sequence()), bidx(boundary_indices(t)),
          matched(t.nodes.size(), 0), degree(t.nodes.size(), 0), boundary(b) {}

    double root_value() {
        if (matched[0] || matched[1]) return 0.0;
        return accept_probability(C, degree[0], degree[1]);
    }

    // Probability that the root edge ends up matched, enumerating all coin
    // outcomes (and minimizing over boundary decisions when adaptive).
    double run(std::size_t step, bool adaptive) {
        if (step == order.size()) return root_value();
        const auto& rec = tree.edges[static_cast<std::size_t>(order[step])];
        const int x = rec.parent_node;
        if (rec.boundary) {
            double value;
            if (adaptive) {
                const double if_matched = play_boundary(step, x, true, adaptive);
                const double if_unmatched = play_boundary(step, x, false, adaptive);
                value = std::min(if_matched, if_unmatched);
            } else {
                value = play_boundary(
                    step, x, boundary->decision(bidx[static_cast<std::size_t>(order[step])]),
                    adaptive);
            }
            return value;
        }
        const int y = rec.child_node;
        if (matched[static_cast<std::size_t>(x)] || matched[static_cast<std::size_t>(y)]) {
            degree[static_cast<std::size_t>(x)]++;
            degree[static_cast<std::size_t>(y)]++;
            const double value = run(step + 1, adaptive);
            degree[static_cast<std::size_t>(x)]--;
            degree[static_cast<std::size_t>(y)]--;
            return value;
        }
        const double p =
            accept_probability(C, degree[static_cast<std::size_t>(x)],
                               degree[static_cast<std::size_t>(y)]);
        degree[static_cast<std::size_t>(x)]++;
        degree[static_cast<std::size_t>(y)]++;
        matched[static_cast<std::size_t>(x)] = matched[static_cast<std::size_t>(y)] = 1;
        const double when_matched = run(step + 1, adaptive);
        matched[static_cast<std::size_t>(x)] = matched[static_cast<std::size_t>(y)] = 0;
        const double when_skipped = run(step + 1, adaptive);
        degree[static_cast<std::size_t>(x)]--;
        degree[static_cast<std::size_t>(y)]--;
        return p * when_matched + (1.0 - p) * when_skipped;
    }

    double play_boundary(std::size_t step, int x, bool match_it, bool adaptive) {
        // The player may match a boundary edge even if its tree endpoint is
        // already matched; the outside endpoint is fresh either way.
        const char was = matched[static_cast<std::size_t>(x)];
        if (match_it) matched[static_cast<std::size_t>(x)] = 1;
        degree[static_cast<std::size_t>(x)]++;
        const double value = run(step + 1, adaptive);
        degree[static_cast<std::size_t>(x)]--;
        matched[static_cast<std::size_t>(x)] = was;
        return value;
    }
};

} // namespace detail

// Exhaustive enumeration over coin outcomes with boundary decisions forced
// by the assignment. Capped at 25 edges; larger trees belong to
// dp_match_probability.
inline double exact_match_probability(const WitnessTree& tree,
                                      const BoundaryAssignment& boundary, double C) {
    if (tree.edge_count() > 25)
        throw std::invalid_argument(
            "exact_match_probability: tree too large; use dp_match_probability");
    detail::GameEngine engine(tree, C, &boundary);
    return engine.run(0, /*adaptive=*/false);
}

// Minimax value: at each boundary edge, in arrival order, the adversary
// picks the decision minimizing the root-match probability given the full
// history. Capped at 20 edges.
inline double adaptive_min_probability(const WitnessTree& tree, double C) {
    if (tree.edge_count() > 20)
        throw std::invalid_argument("adaptive_min_probability: tree too large");
    detail::GameEngine engine(tree, C, nullptr);
    return engine.run(0, /*adaptive=*/true);
}

// One Monte Carlo play of the game; returns whether the root edge matched.
inline bool simulate_game(const WitnessTree& tree, const BoundaryAssignment& boundary, double C,
                          const RandomSource& src, std::uint64_t instance) {
    const std::vector<int> order = tree.arrival_sequence();
    const std::vector<int> bidx = detail::boundary_indices(tree);
    std::vector<char> matched(tree.nodes.size(), 0);
    std::vector<int> degree(tree.nodes.size(), 0);
    for (std::size_t step = 0; step < order.size(); ++step) {
        const auto& rec = tree.edges[static_cast<std::size_t>(order[step])];
        const int x = rec.parent_node;
        if (rec.boundary) {
            if (boundary.decision(bidx[static_cast<std::size_t>(order[step])]))
                matched[static_cast<std::size_t>(x)] = 1;
            degree[static_cast<std::size_t>(x)]++;
            continue;
        }
        const int y = rec.child_node;
        if (!matched[static_cast<std::size_t>(x)] && !matched[static_cast<std::size_t>(y)]) {
            const double p = accept_probability(C, degree[static_cast<std::size_t>(x)],
                                                degree[static_cast<std::size_t>(y)]);
            if (uniform_draw(src, instance, static_cast<std::uint64_t>(order[step])) <= p)
                matched[static_cast<std::size_t>(x)] = matched[static_cast<std::size_t>(y)] = 1;
        }
        degree[static_cast<std::size_t>(x)]++;
        degree[static_cast<std::size_t>(y)]++;
    }
    if (matched[0] || matched[1]) return false;
    const double p = accept_probability(C, degree[0], degree[1]);
    return uniform_draw(src, instance, static_cast<std::uint64_t>(tree.edges.size())) <= p;
}

// Witness set under the random-order definition: edges f admitting an
// arrival-increasing simple edge path f = e_{i0}, ..., e_{il} = e. Found by
// exhaustive backward search from e over decreasing indices with
// vertex-disjointness, which is exactly the definition.
inline std::vector<int> witness_set_random_order(const EdgeStream& stream, int edge_id) {
    const Graph& graph = stream.graph();
    if (edge_id < 0 || edge_id >= graph.edge_count())
        throw std::invalid_argument("witness_set_random_order: edge not in graph");
    const std::vector<int> rank = stream.arrival_rank();
    std::vector<char> witness(static_cast<std::size_t>(graph.edge_count()), 0);
    witness[static_cast<std::size_t>(edge_id)] = 1;

    std::vector<char> on_path(static_cast<std::size_t>(graph.vertex_count()), 0);
    auto [eu, ev] = graph.edge(edge_id);

    // Extend the path backward from `frontier`; every edge appended so far
    // has smaller rank than its successor, so every edge on the stack is a
    // witness the moment it joins the path.
    auto dfs = [&](auto&& self, int frontier, int rank_cap) -> void {
        for (const auto& inc : graph.incident(frontier)) {
            if (rank[static_cast<std::size_t>(inc.edge_id)] >= rank_cap) continue;
            if (on_path[static_cast<std::size_t>(inc.neighbor)]) continue;
            witness[static_cast<std::size_t>(inc.edge_id)] = 1;
            on_path[static_cast<std::size_t>(inc.neighbor)] = 1;
            self(self, inc.neighbor, rank[static_cast<std::size_t>(inc.edge_id)]);
            on_path[static_cast<std::size_t>(inc.neighbor)] = 0;
        }
    };
    on_path[static_cast<std::size_t>(eu)] = 1;
    on_path[static_cast<std::size_t>(ev)] = 1;
    const int cap = rank[static_cast<std::size_t>(edge_id)];
    dfs(dfs, eu, cap);
    dfs(dfs, ev, cap);

    std::vector<int> result;
    for (int id = 0; id < graph.edge_count(); ++id)
        if (witness[static_cast<std::size_t>(id)]) result.push_back(id);
    return result;
}

// Deletion coupling: with addressed randomness, the matcher's outcome for e
// is identical on the full stream and on the witness-set-only substream in
// the same relative order. Non-witness edges never touch a witness edge's
// endpoints before that edge arrives, so removing them is invisible to e.
inline bool witness_equivalence_check(const EdgeStream& stream, int edge_id, double C,
                                      const RandomSource& src, std::uint64_t instance) {
    const Graph& graph = stream.graph();
    const std::vector<int> witnesses = witness_set_random_order(stream, edge_id);
    std::vector<char> is_witness(static_cast<std::size_t>(graph.edge_count()), 0);
    for (int id : witnesses) is_witness[static_cast<std::size_t>(id)] = 1;

    auto outcome_for = [&](bool witness_only) {
        MatcherState state(graph.vertex_count(), C);
        MatchOutcome out = MatchOutcome::RejectedByCoin;
        for (int k = 0; k < stream.size(); ++k) {
            const int id = stream.arrival(k);
            if (witness_only && !is_witness[static_cast<std::size_t>(id)]) continue;
            auto [u, v] = graph.edge(id);
            const MatchOutcome o = state.process_edge(
                id, u, v, uniform_draw(src, instance, static_cast<std::uint64_t>(id)));
            if (id == edge_id) out = o;
        }
        return out;
    };
    return outcome_for(false) == outcome_for(true);
}

} // namespace olec

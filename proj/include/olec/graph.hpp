#pragma once

#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace olec {

// Simple undirected graph over dense vertex ids 0..n-1 with a declared
// maximum degree. Self-loops and parallel edges are rejected.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph(int n, std::vector<Edge> edges, int delta)
        : n_(n), edges_(std::move(edges)), delta_(delta) {
        if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
        if (delta_ < 1) throw std::invalid_argument("Graph: delta must be >= 1");
        adj_.resize(static_cast<std::size_t>(n_));
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(edges_.size() * 2);
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            auto [u, v] = edges_[id];
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw std::invalid_argument("Graph: endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
            const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                                      static_cast<std::uint32_t>(std::max(u, v));
            if (!seen.insert(key).second)
                throw std::invalid_argument("Graph: parallel edge rejected");
            adj_[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(id)});
            adj_[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(id)});
        }
        for (int v = 0; v < n_; ++v) {
            if (static_cast<int>(adj_[static_cast<std::size_t>(v)].size()) > delta_)
                throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                            " exceeds declared max degree");
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int delta() const { return delta_; }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    struct Incidence {
        int neighbor;
        int edge_id;
    };
    const std::vector<Incidence>& incident(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    int delta_;
    std::vector<std::vector<Incidence>> adj_;
};

// A graph plus an arrival order: order[k] is the edge id revealed k-th.
class EdgeStream {
public:
    EdgeStream(Graph graph, std::vector<int> order)
        : graph_(std::move(graph)), order_(std::move(order)) {
        const std::size_t m = graph_.edges().size();
        if (order_.size() != m)
            throw std::invalid_argument("EdgeStream: order length mismatch");
        std::vector<char> seen(m, 0);
        for (int id : order_) {
            if (id < 0 || static_cast<std::size_t>(id) >= m || seen[static_cast<std::size_t>(id)])
                throw std::invalid_argument("EdgeStream: order is not a permutation");
            seen[static_cast<std::size_t>(id)] = 1;
        }
    }

    static EdgeStream identity_order(Graph graph) {
        std::vector<int> order(graph.edges().size());
        std::iota(order.begin(), order.end(), 0);
        return EdgeStream(std::move(graph), std::move(order));
    }

    const Graph& graph() const { return graph_; }
    const std::vector<int>& order() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }
    // Edge id arriving at position k.
    int arrival(int k) const { return order_[static_cast<std::size_t>(k)]; }

    // Arrival position of each edge id (inverse permutation).
    std::vector<int> arrival_rank() const {
        std::vector<int> rank(order_.size());
        for (std::size_t k = 0; k < order_.size(); ++k)
            rank[static_cast<std::size_t>(order_[k])] = static_cast<int>(k);
        return rank;
    }

private:
    Graph graph_;
    std::vector<int> order_;
};

// True iff the subgraph induced by the vertices within `radius` hops of
// either endpoint of edge e contains a cycle. Distances are taken from the
// nearer endpoint (multi-source BFS from both).
inline bool neighborhood_has_cycle(const Graph& g, int edge_id, int radius) {
    if (edge_id < 0 || edge_id >= g.edge_count())
        throw std::invalid_argument("neighborhood_has_cycle: edge not in graph");
    if (radius < 0)
        throw std::invalid_argument("neighborhood_has_cycle: negative radius");
    auto [u, v] = g.edge(edge_id);

    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> bfs;
    dist[static_cast<std::size_t>(u)] = 0;
    dist[static_cast<std::size_t>(v)] = 0;
    bfs.push(u);
    bfs.push(v);
    std::vector<int> ball{u, v};
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        if (dist[static_cast<std::size_t>(x)] == radius) continue;
        for (const auto& inc : g.incident(x)) {
            if (dist[static_cast<std::size_t>(inc.neighbor)] < 0) {
                dist[static_cast<std::size_t>(inc.neighbor)] = dist[static_cast<std::size_t>(x)] + 1;
                ball.push_back(inc.neighbor);
                bfs.push(inc.neighbor);
            }
        }
    }

    // Induced subgraph has a cycle iff some component has #edges >= #vertices;
    // equivalently a non-tree edge shows up during a fresh BFS with parent
    // tracking. Count induced edges per component instead: simpler and exact.
    std::size_t vertices = ball.size();
    std::size_t induced_edges = 0;
    for (int x : ball) {
        for (const auto& inc : g.incident(x)) {
            if (dist[static_cast<std::size_t>(inc.neighbor)] >= 0 && inc.neighbor > x)
                ++induced_edges;
        }
    }
    if (induced_edges >= vertices) return true;
    // Fewer edges than vertices overall can still hide a cycle only if the
    // induced subgraph is disconnected; it is not (every ball vertex connects
    // back to u or v inside the ball), so edges < vertices means a tree.
    return false;
}

} // namespace olec

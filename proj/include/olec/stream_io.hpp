#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "olec/graph.hpp"

namespace olec {

// Text stream format:
//   line 1:        n m delta
//   lines 2..m+1:  u v          (0-indexed, arrival order = line order)
// Lines starting with '#' are comments.

inline void emit_stream(const EdgeStream& s, std::ostream& out) {
    const Graph& g = s.graph();
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.delta() << '\n';
    for (int k = 0; k < s.size(); ++k) {
        auto [u, v] = g.edge(s.arrival(k));
        out << u << ' ' << v << '\n';
    }
}

inline std::string emit_stream(const EdgeStream& s) {
    std::ostringstream out;
    emit_stream(s, out);
    return out.str();
}

// Parsing normalizes the arrival order: the edge list is stored in line
// order, so the returned stream has the identity order permutation.
inline EdgeStream parse_stream(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& dst) -> bool {
        while (std::getline(in, dst)) {
            std::size_t pos = dst.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (dst[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_data_line(line)) throw std::invalid_argument("stream: missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0, delta = 0;
    if (!(header >> n >> m >> delta))
        throw std::invalid_argument("stream: bad header, expected 'n m delta'");
    if (n < 0 || m < 0) throw std::invalid_argument("stream: negative n or m");

    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(line))
            throw std::invalid_argument("stream: expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(i));
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw std::invalid_argument("stream: bad edge line: " + line);
        edges.push_back({u, v});
    }
    return EdgeStream::identity_order(
        Graph(static_cast<int>(n), std::move(edges), static_cast<int>(delta)));
}

inline EdgeStream parse_stream(const std::string& text) {
    std::istringstream in(text);
    return parse_stream(in);
}

} // namespace olec

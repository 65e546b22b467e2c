#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "olec/instances.hpp"
#include "olec/sparsifier.hpp"

using namespace olec;

TEST_CASE("subsample threshold formula") {
    SubsampleState s(10, 100, 50);
    REQUIRE(s.eta() == Catch::Approx(0.8391448867609612).epsilon(1e-12));
    REQUIRE(s.coin_threshold() == Catch::Approx(0.0804275566195194).epsilon(1e-12));
}

TEST_CASE("subsample validates its parameters") {
    REQUIRE_THROWS_AS(SubsampleState(10, 50, 100), std::invalid_argument);  // dp > delta
    // eta = 3*sqrt(ln dp / dp) leaves (0,1) below dp = 31 under natural log.
    REQUIRE_THROWS_AS(SubsampleState(10, 100, 26), std::invalid_argument);
    REQUIRE_THROWS_AS(SubsampleState(10, 100, 30), std::invalid_argument);
    REQUIRE_NOTHROW(SubsampleState(10, 100, 31));
}

TEST_CASE("subsample coin failure near one") {
    SubsampleState s(4, 100, 50);
    const double just_below_one = 1.0 - 1e-16;
    REQUIRE(s.process_edge(0, 0, 1, just_below_one) == SubsampleOutcome::DroppedByCoin);
    REQUIRE(s.coin_successes(0) == 0);
}

TEST_CASE("counters count coin successes, not kept edges") {
    // Vertex 0 is a hub: force coin success (r = 0) on 50 edges, then the cap
    // fires while the counter keeps advancing.
    SubsampleState s(100, 100, 50);
    for (int i = 0; i < 50; ++i)
        REQUIRE(s.process_edge(i, 0, i + 1, 0.0) == SubsampleOutcome::Kept);
    REQUIRE(s.coin_successes(0) == 50);
    REQUIRE(s.process_edge(50, 0, 51, 0.0) == SubsampleOutcome::DroppedByDegreeCap);
    REQUIRE(s.coin_successes(0) == 51);
    REQUIRE(s.coin_successes(51) == 1);  // far endpoint advanced too
    REQUIRE(s.kept_degree(0) == 50);
}

TEST_CASE("kept degrees never exceed delta_prime") {
    const EdgeStream stream = complete_graph_stream(61, 9);
    const Graph& g = stream.graph();
    const RandomSource src{8080};
    for (std::uint64_t t = 0; t < 50; ++t) {
        SubsampleState s(g.vertex_count(), 60, 31);
        for (int k = 0; k < stream.size(); ++k) {
            const int id = stream.arrival(k);
            auto [u, v] = g.edge(id);
            s.process_edge(id, u, v, uniform_draw(src, t, static_cast<std::uint64_t>(id)));
        }
        for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(s.kept_degree(v) <= 31);
    }
}

TEST_CASE("split basics") {
    SplitState s(10, 100, 10);
    REQUIRE(s.T() == 10);
    REQUIRE(s.slack() == Catch::Approx(3.0 * std::sqrt(10.0 * std::log(10.0))).epsilon(1e-12));

    SplitState t(10, 95, 10);
    REQUIRE(t.T() == 10);  // ceiling
}

TEST_CASE("split color comes from the draw and caps reject") {
    SplitState s(30, 20, 2);  // T = 10, cap = 2 + 3*sqrt(2 ln 2)
    const double cap = s.cap();
    const int cap_count = static_cast<int>(cap);
    // Feed edges all marked color 1 (r = 0) at vertex 0 until the cap fires.
    int placed = 0;
    int rejected_at = -1;
    for (int i = 0; i < cap_count + 1; ++i) {
        const SplitOutcome out = s.process_edge(i, 0, i + 1, 0.0);
        if (out.rejected()) {
            rejected_at = i;
            break;
        }
        REQUIRE(out.part == 1);
        ++placed;
    }
    REQUIRE(placed == cap_count);
    REQUIRE(rejected_at == cap_count);
    REQUIRE(s.marks(0, 1) == cap_count + 1);  // marks advance on rejection too
}

TEST_CASE("split partition covers every edge exactly once") {
    const EdgeStream stream = complete_graph_stream(41, 17);
    const Graph& g = stream.graph();
    SplitState s(g.vertex_count(), 40, 10);
    const RandomSource src{515};
    for (int k = 0; k < stream.size(); ++k) {
        const int id = stream.arrival(k);
        auto [u, v] = g.edge(id);
        s.process_edge(id, u, v, uniform_draw(src, 0, static_cast<std::uint64_t>(id)));
    }
    std::vector<int> where(static_cast<std::size_t>(g.edge_count()), 0);
    long long total = 0;
    for (const auto& part : s.parts())
        for (int id : part) {
            ++where[static_cast<std::size_t>(id)];
            ++total;
        }
    REQUIRE(total == g.edge_count());
    for (int id = 0; id < g.edge_count(); ++id) REQUIRE(where[static_cast<std::size_t>(id)] == 1);

    // Per-color part degrees never exceed the cap.
    for (int p = 1; p <= s.T(); ++p) {
        std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int id : s.parts()[static_cast<std::size_t>(p)]) {
            auto [u, v] = g.edge(id);
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            REQUIRE(static_cast<double>(deg[static_cast<std::size_t>(v)]) <= s.cap());
    }
}

TEST_CASE("subsample outcome of an edge depends only on incident arrivals") {
    // Coupling used by the marginal experiments: feeding only the edges
    // incident to the target's endpoints (same draws) preserves its outcome.
    const EdgeStream stream = complete_graph_stream(41, 23);
    const Graph& g = stream.graph();
    const RandomSource src{616};
    const int target = stream.arrival(stream.size() - 1);
    auto [tu, tv] = g.edge(target);
    for (std::uint64_t t = 0; t < 200; ++t) {
        SubsampleOutcome full_out = SubsampleOutcome::DroppedByCoin;
        SubsampleState full(g.vertex_count(), 40, 31);
        for (int k = 0; k < stream.size(); ++k) {
            const int id = stream.arrival(k);
            auto [u, v] = g.edge(id);
            const SubsampleOutcome o =
                full.process_edge(id, u, v, uniform_draw(src, t, static_cast<std::uint64_t>(id)));
            if (id == target) full_out = o;
        }
        SubsampleOutcome sub_out = SubsampleOutcome::DroppedByCoin;
        SubsampleState sub(g.vertex_count(), 40, 31);
        for (int k = 0; k < stream.size(); ++k) {
            const int id = stream.arrival(k);
            auto [u, v] = g.edge(id);
            if (u != tu && u != tv && v != tu && v != tv) continue;
            const SubsampleOutcome o =
                sub.process_edge(id, u, v, uniform_draw(src, t, static_cast<std::uint64_t>(id)));
            if (id == target) sub_out = o;
        }
        REQUIRE(full_out == sub_out);
    }
}

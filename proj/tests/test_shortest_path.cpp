#include <doctest.h>

#include <cmath>
#include <random>

#include "geostretch/error.hpp"
#include "geostretch/parallel.hpp"
#include "geostretch/shortest_path.hpp"
#include "support.hpp"

using namespace geostretch;
using geostretch::testing::bellman_ford;
using geostretch::testing::corpus_graph;
using geostretch::testing::unit_path;

TEST_CASE("sssp on the unit path") {
    Graph g = unit_path(3);
    DistanceRow row = sssp(g, 0);
    CHECK(row.dist == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(row.parent[0] == kNoParent);
    CHECK(row.parent[1] == 0);
    CHECK(row.parent[2] == 1);
}

TEST_CASE("sssp picks the direct edge over the detour") {
    Graph g = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 0.5}});
    DistanceRow row = sssp(g, 1);
    CHECK(row.dist == std::vector<double>{1.0, 0.0, 1.0}); // 1->2 direct beats 1->0->2 = 1.5
}

TEST_CASE("sssp distance to the source is zero") {
    Graph g = corpus_graph(20, 3);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        CHECK(sssp(g, s).dist[s] == 0.0);
    }
    CHECK_THROWS_AS(sssp(g, static_cast<VertexId>(g.vertex_count())), Error);
}

TEST_CASE("parent walk reproduces the distance") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = corpus_graph(30, seed);
        DistanceRow row = sssp(g, 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            double total = 0.0;
            VertexId walk = v;
            std::size_t hops = 0;
            while (row.parent[walk] != kNoParent) {
                auto prev = static_cast<VertexId>(row.parent[walk]);
                total += g.edge_length(prev, walk);
                walk = prev;
                REQUIRE(++hops <= g.vertex_count());
            }
            CHECK(walk == 0);
            CHECK(total == doctest::Approx(row.dist[v]).epsilon(kRelTolerance));
        }
    }
}

TEST_CASE("relaxation fixed point holds on every edge") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = corpus_graph(30, seed + 100);
        DistanceRow row = sssp(g, 0);
        for (const Edge& e : g.edges()) {
            CHECK(row.dist[e.v] <= row.dist[e.u] + e.length + 1e-15);
            CHECK(row.dist[e.u] <= row.dist[e.v] + e.length + 1e-15);
        }
    }
}

TEST_CASE("sssp agrees with exhaustive relaxation on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = corpus_graph(50, seed + 500);
        std::mt19937_64 rng(seed);
        auto source = static_cast<VertexId>(rng() % g.vertex_count());
        DistanceRow row = sssp(g, source);
        auto reference = bellman_ford(g, source);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(row.dist[v] == doctest::Approx(reference[v]).epsilon(kRelTolerance));
        }
    }
}

TEST_CASE("symmetry and triangle inequality on random samples") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = corpus_graph(30, seed + 900);
        std::size_t n = g.vertex_count();
        auto u = static_cast<VertexId>(rng() % n);
        auto v = static_cast<VertexId>(rng() % n);
        auto w = static_cast<VertexId>(rng() % n);
        DistanceRow from_u = sssp(g, u);
        DistanceRow from_v = sssp(g, v);
        CHECK(from_u.dist[v] == doctest::Approx(from_v.dist[u]).epsilon(kRelTolerance));
        CHECK(from_u.dist[w] <= from_u.dist[v] + from_v.dist[w] + 1e-12);
    }
}

TEST_CASE("edge_endpoint_distance examples") {
    CHECK(edge_endpoint_distance(unit_path(2), 0, 1) == 1.0);

    // Direct edge 1.9 beats the two-hop detour of 2.0.
    Graph triangle = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.9}});
    CHECK(edge_endpoint_distance(triangle, 0, 2) == 1.9);

    // Square cycle with a long chord: the detour wins.
    Graph square = build_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0},
                                   {0, 2, 2.5}});
    CHECK(edge_endpoint_distance(square, 0, 2) == 2.0);

    CHECK_THROWS_AS(edge_endpoint_distance(square, 1, 3), Error);
}

TEST_CASE("edge_endpoint_distance never exceeds the edge and matches sssp exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = corpus_graph(30, seed + 1300);
        ShortestPathWorkspace workspace(g);
        for (const Edge& e : g.edges()) {
            double d = workspace.endpoint_distance(e.u, e.v);
            CHECK(d <= e.length);
            CHECK(d == sssp(g, e.u).dist[e.v]); // bit-identical settle prefix
        }
    }
}

TEST_CASE("multi_sssp assembles rows in source order") {
    Graph g = unit_path(3);
    DistanceTable table = multi_sssp(g, {0, 2});
    CHECK(table.row(0)[0] == 0.0);
    CHECK(table.row(0)[2] == 2.0);
    CHECK(table.row(1)[0] == 2.0);
    CHECK(table.row(1)[2] == 0.0);
    CHECK(table.at(0, 1) == 1.0);
    CHECK(table.at(1, 1) == 1.0);
}

TEST_CASE("multi_sssp over all vertices equals APSP") {
    Graph g = corpus_graph(15, 77);
    std::vector<VertexId> all(g.vertex_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    DistanceTable table = multi_sssp(g, all);
    for (VertexId s : all) {
        DistanceRow row = sssp(g, s);
        for (VertexId v : all) CHECK(table.at(s, v) == row.dist[v]);
    }
}

TEST_CASE("multi_sssp validates its source list") {
    Graph g = unit_path(3);
    CHECK_THROWS_AS(multi_sssp(g, {}), Error);
    CHECK_THROWS_AS(multi_sssp(g, {0, 0}), Error);
    CHECK_THROWS_AS(multi_sssp(g, {0, 9}), Error);
}

TEST_CASE("multi_sssp is deterministic across thread counts") {
    Graph g = random_connected_graph(40, 30, false, 99);
    std::vector<VertexId> sources{0, 2, 5, 7};
    set_thread_count(1);
    DistanceTable serial = multi_sssp(g, sources);
    set_thread_count(4);
    DistanceTable parallel = multi_sssp(g, sources);
    set_thread_count(0);
    CHECK(serial.values == parallel.values);
}

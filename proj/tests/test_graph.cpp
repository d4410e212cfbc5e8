#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "geostretch/error.hpp"
#include "geostretch/graph.hpp"
#include "support.hpp"

using namespace geostretch;

namespace {

Errc error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::IoError;
}

} // namespace

TEST_CASE("build_graph accepts the smallest connected graph") {
    Graph g = build_graph(2, {{0, 1, 1.0}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_length(0, 1) == 1.0);
}

TEST_CASE("build_graph rejects a disconnected graph and lists components") {
    try {
        build_graph(3, {{0, 1, 1.0}});
        FAIL("expected DisconnectedGraph");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DisconnectedGraph);
        CHECK(std::string(e.what()).find("[2]") != std::string::npos);
    }
}

TEST_CASE("triangle graph with a short chord has r_e = 2") {
    Graph g = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 0.5}});
    EdgeStats stats = edge_stats(g);
    CHECK(stats.l_min == 0.5);
    CHECK(stats.l_max == 1.0);
    CHECK(stats.r_e == 2.0);
}

TEST_CASE("build_graph error paths") {
    CHECK(error_code([] { build_graph(2, {{0, 0, 1.0}}); }) == Errc::SelfLoop);
    CHECK(error_code([] { build_graph(2, {{0, 1, 0.0}}); }) == Errc::NonPositiveLength);
    CHECK(error_code([] { build_graph(2, {{0, 1, -2.0}}); }) == Errc::NonPositiveLength);
    CHECK(error_code([] { build_graph(2, {{0, 2, 1.0}}); }) == Errc::InvalidVertexId);
    CHECK(error_code([] {
        build_graph(2, {{0, 1, 1.0}, {1, 0, 2.0}});
    }) == Errc::DuplicateEdge);
    CHECK(error_code([] { build_graph(0, {}); }) == Errc::InvalidVertexId);
}

TEST_CASE("edge_stats on unit path and single vertex") {
    Graph path = geostretch::testing::unit_path(3);
    EdgeStats stats = edge_stats(path);
    CHECK(stats.l_min == 1.0);
    CHECK(stats.l_max == 1.0);
    CHECK(stats.r_e == 1.0);

    Graph lonely = build_graph(1, {});
    CHECK(error_code([&] { edge_stats(lonely); }) == Errc::EmptyEdgeSet);
}

TEST_CASE("r_e >= 1 with equality iff all edges equal") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = geostretch::testing::corpus_graph(12, seed);
        EdgeStats stats = edge_stats(g);
        CHECK(stats.r_e >= 1.0);
        bool all_equal = true;
        for (const Edge& e : g.edges()) {
            if (e.length != g.edges().front().length) all_equal = false;
        }
        CHECK((stats.r_e == 1.0) == all_equal);
    }
}

TEST_CASE("connectivity matches a traversal from vertex 0") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 9;
        std::vector<Edge> edges;
        std::set<std::pair<VertexId, VertexId>> used;
        std::size_t target = rng() % (n * (n - 1) / 2 + 1);
        while (used.size() < target) {
            auto u = static_cast<VertexId>(rng() % n);
            auto v = static_cast<VertexId>(rng() % n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (used.insert({u, v}).second) edges.push_back({u, v, 1.0});
        }
        bool connected = connected_components(n, edges).size() == 1;
        bool built = true;
        try {
            build_graph(n, edges);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::DisconnectedGraph);
            built = false;
        }
        CHECK(built == connected);
    }
}

TEST_CASE("edge list round trip and parallel-edge collapse") {
    std::istringstream in("3 4\n"
                          "# a comment\n"
                          "0 1 1.0\n"
                          "1 2 2.5\n"
                          "2 1 1.5   # parallel, shorter\n"
                          "0 2 0.75\n");
    ParsedGraph parsed = read_edge_list(in);
    CHECK(parsed.warnings.size() == 1);
    CHECK(parsed.graph.edge_count() == 3);
    CHECK(parsed.graph.edge_length(1, 2) == 1.5);

    std::ostringstream out;
    write_edge_list(parsed.graph, out);
    std::istringstream in2(out.str());
    ParsedGraph again = read_edge_list(in2);
    CHECK(again.graph.checksum() == parsed.graph.checksum());
    CHECK(again.warnings.empty());
}

TEST_CASE("edge list parser rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        read_edge_list(in);
    };
    CHECK(error_code([&] { parse(""); }) == Errc::ParseError);
    CHECK(error_code([&] { parse("2 1\n0 5 1.0\n"); }) == Errc::InvalidVertexId);
    CHECK(error_code([&] { parse("2 2\n0 1 1.0\n"); }) == Errc::ParseError);
    CHECK(error_code([&] { parse("2 1\n0 x 1.0\n"); }) == Errc::ParseError);
}

TEST_CASE("checksum distinguishes graphs") {
    Graph a = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    Graph b = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.5}});
    Graph c = build_graph(3, {{0, 1, 1.0}, {0, 2, 1.0}});
    CHECK(a.checksum() != b.checksum());
    CHECK(a.checksum() != c.checksum());
    Graph a2 = build_graph(3, {{2, 1, 1.0}, {1, 0, 1.0}}); // same canonical list
    CHECK(a.checksum() == a2.checksum());
}

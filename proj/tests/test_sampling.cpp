#include <doctest.h>

#include <algorithm>
#include <limits>
#include <set>

#include "geostretch/error.hpp"
#include "geostretch/exhaustive.hpp"
#include "geostretch/sampling.hpp"
#include "support.hpp"

using namespace geostretch;
using geostretch::testing::bf_kcenter_radius;
using geostretch::testing::corpus_graph;
using geostretch::testing::unit_path;

TEST_CASE("FPS on the unit path") {
    Graph g = unit_path(3);

    SourceSet one = farthest_point_sampling(g, 1, 0);
    CHECK(one.sources == std::vector<VertexId>{0});
    CHECK(one.radii == std::vector<double>{2.0});

    SourceSet two = farthest_point_sampling(g, 2, 0);
    CHECK(two.sources == std::vector<VertexId>{0, 2});
    CHECK(two.radii == std::vector<double>{2.0, 1.0});
}

TEST_CASE("FPS with k = n enumerates all vertices and ends at radius 0") {
    Graph g = corpus_graph(12, 5);
    std::size_t n = g.vertex_count();
    SourceSet all = farthest_point_sampling(g, n, 0);
    CHECK(all.sources.size() == n);
    std::set<VertexId> distinct(all.sources.begin(), all.sources.end());
    CHECK(distinct.size() == n);
    CHECK(all.radii.back() == 0.0);
}

TEST_CASE("FPS input validation") {
    Graph g = unit_path(3);
    CHECK_THROWS_AS(farthest_point_sampling(g, 4, 0), Error);
    CHECK_THROWS_AS(farthest_point_sampling(g, 0, 0), Error);
    CHECK_THROWS_AS(farthest_point_sampling(g, 1, 7), Error);
}

TEST_CASE("radius trace is non-increasing and the new source attains it") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = corpus_graph(25, seed + 40);
        std::size_t k = 1 + seed % g.vertex_count();
        SourceSet set = farthest_point_sampling(g, k, 0);
        for (std::size_t i = 1; i < set.radii.size(); ++i) {
            CHECK(set.radii[i] <= set.radii[i - 1]);
            // d(s_{i+1}, nearest earlier source) equals the previous radius
            std::vector<VertexId> earlier(set.sources.begin(), set.sources.begin() + i);
            double nearest = std::numeric_limits<double>::infinity();
            auto dist = geostretch::testing::bellman_ford(g, set.sources[i]);
            for (VertexId s : earlier) nearest = std::min(nearest, dist[s]);
            CHECK(nearest == doctest::Approx(set.radii[i - 1]).epsilon(kRelTolerance));
        }
    }
}

TEST_CASE("final trace radius equals kcenter_radius of the set") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = corpus_graph(20, seed + 70);
        std::size_t k = 1 + seed % 4;
        if (k > g.vertex_count()) continue;
        SourceSet set = farthest_point_sampling(g, k, 0);
        CHECK(set.radii.back() == kcenter_radius(g, set.sources));
    }
}

TEST_CASE("identical inputs give identical source sets") {
    Graph g = corpus_graph(30, 11);
    std::size_t k = std::min<std::size_t>(5, g.vertex_count());
    SourceSet a = farthest_point_sampling(g, k, 0);
    SourceSet b = farthest_point_sampling(g, k, 0);
    CHECK(a.sources == b.sources);
    CHECK(a.radii == b.radii);

    SourceSet s1 = farthest_point_sampling_seeded(g, k, 424242);
    SourceSet s2 = farthest_point_sampling_seeded(g, k, 424242);
    CHECK(s1.sources == s2.sources);
    CHECK(s1.start_policy.kind == StartPolicy::Kind::SeededRandom);
    CHECK(s1.start_policy.start == s1.sources[0]);
}

TEST_CASE("kcenter_radius examples") {
    Graph g = unit_path(3);
    std::vector<VertexId> center{1};
    std::vector<VertexId> end{0};
    std::vector<VertexId> all{0, 1, 2};
    CHECK(kcenter_radius(g, center) == 1.0);
    CHECK(kcenter_radius(g, end) == 2.0);
    CHECK(kcenter_radius(g, all) == 0.0);
    CHECK_THROWS_AS(kcenter_radius(g, std::span<const VertexId>{}), Error);
}

TEST_CASE("kcenter_radius agrees with the reference sweep") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = corpus_graph(25, seed + 600);
        SourceSet set = farthest_point_sampling(g, std::min<std::size_t>(3, g.vertex_count()), 0);
        CHECK(kcenter_radius(g, set.sources) ==
              doctest::Approx(bf_kcenter_radius(g, set.sources)).epsilon(kRelTolerance));
    }
}

TEST_CASE("Gonzalez guarantee against the exhaustive optimum") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = corpus_graph(12, seed + 200);
        std::size_t n = g.vertex_count();
        for (std::size_t k = 1; k <= std::min<std::size_t>(4, n); ++k) {
            ExhaustiveResult opt = optimal_kcenter_sources(g, k);
            for (VertexId start = 0; start < n; ++start) {
                SourceSet fps = farthest_point_sampling(g, k, start);
                double fps_radius = kcenter_radius(g, fps.sources);
                CHECK(fps_radius <= 2.0 * opt.objective + kBoundTolerance);
            }
        }
    }
}

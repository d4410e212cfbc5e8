#include <doctest.h>

#include <algorithm>

#include "geostretch/analysis.hpp"
#include "geostretch/error.hpp"
#include "geostretch/exhaustive.hpp"
#include "geostretch/sampling.hpp"
#include "support.hpp"

using namespace geostretch;
using geostretch::testing::bf_stretch;
using geostretch::testing::corpus_graph;
using geostretch::testing::unit_path;

TEST_CASE("binomial coefficients used by the budget guard") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(12, 3) == 220);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 9) == 0);
}

TEST_CASE("optimal stretch sources on the unit path") {
    Graph g = unit_path(3);
    ExhaustiveResult result = optimal_stretch_sources(g, 1);
    // enumerate {0},{1},{2} -> stretches 3,1,3
    CHECK(result.objective == 1.0);
    REQUIRE(result.best_sets.size() == 1);
    CHECK(result.best_sets[0] == std::vector<VertexId>{1});
    CHECK(result.sets_examined == 3);
    CHECK(bf_stretch(g, {1}) == 1.0);
    CHECK(bf_stretch(g, {0}) == 3.0);
}

TEST_CASE("optimal stretch with k = n is 1") {
    Graph g = corpus_graph(8, 3);
    ExhaustiveResult result = optimal_stretch_sources(g, g.vertex_count());
    CHECK(result.objective == 1.0);
    CHECK(result.sets_examined == 1);
}

TEST_CASE("budget arithmetic: C(20,10) fits, C(30,15) does not") {
    Graph fits = random_connected_graph(20, 10, true, 1);
    CHECK_NOTHROW(optimal_kcenter_sources(fits, 10));

    Graph too_big = random_connected_graph(30, 10, true, 2);
    try {
        optimal_kcenter_sources(too_big, 15);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
        CHECK(std::string(e.what()).find("155117520") != std::string::npos);
    }
}

TEST_CASE("optimizers reject k = 0 and k > n") {
    Graph g = unit_path(3);
    CHECK_THROWS_AS(optimal_stretch_sources(g, 0), Error);
    CHECK_THROWS_AS(optimal_kcenter_sources(g, 4), Error);
}

TEST_CASE("optimal k-center on paths") {
    Graph g = unit_path(3);
    ExhaustiveResult result = optimal_kcenter_sources(g, 1);
    CHECK(result.objective == 1.0); // radii are 2, 1, 2
    CHECK(result.best_sets == std::vector<std::vector<VertexId>>{{1}});

    ExhaustiveResult all = optimal_kcenter_sources(g, 3);
    CHECK(all.objective == 0.0);

    Graph p4 = unit_path(4);
    ExhaustiveResult two = optimal_kcenter_sources(p4, 2);
    CHECK(two.objective == 1.0);
    CHECK(two.sets_examined == 6);
    // every radius-1 pair, in lexicographic order
    std::vector<std::vector<VertexId>> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK(two.best_sets == expected);
    for (const auto& set : two.best_sets) {
        CHECK(geostretch::testing::bf_kcenter_radius(p4, set) == 1.0);
    }
    CHECK(geostretch::testing::bf_kcenter_radius(p4, {0, 1}) == 2.0);
    CHECK(geostretch::testing::bf_kcenter_radius(p4, {2, 3}) == 2.0);
}

TEST_CASE("minimum vertex cover on tiny graphs") {
    using Pairs = std::vector<std::pair<VertexId, VertexId>>;

    auto single = minimum_vertex_cover(2, Pairs{{0, 1}}, 2);
    REQUIRE(single.has_value());
    CHECK(single->objective == 1.0);

    auto path = minimum_vertex_cover(3, Pairs{{0, 1}, {1, 2}}, 3);
    REQUIRE(path.has_value());
    CHECK(path->objective == 1.0);
    CHECK(path->best_sets == std::vector<std::vector<VertexId>>{{1}});

    auto triangle = minimum_vertex_cover(3, Pairs{{0, 1}, {1, 2}, {0, 2}}, 3);
    REQUIRE(triangle.has_value());
    CHECK(triangle->objective == 2.0);
    CHECK(triangle->best_sets.size() == 3); // any two of three vertices

    auto capped = minimum_vertex_cover(3, Pairs{{0, 1}, {1, 2}, {0, 2}}, 1);
    CHECK_FALSE(capped.has_value());

    auto empty_edges = minimum_vertex_cover(2, Pairs{}, 2);
    REQUIRE(empty_edges.has_value());
    CHECK(empty_edges->objective == 0.0);
}

TEST_CASE("exists_sources_with_stretch on the unit path") {
    Graph g = unit_path(3);
    ExistsResult yes = exists_sources_with_stretch(g, 1, 1.0);
    CHECK(yes.exists);
    CHECK(yes.witness == std::vector<VertexId>{1});

    ExistsResult no = exists_sources_with_stretch(g, 1, 0.5);
    CHECK_FALSE(no.exists);
    CHECK(no.sets_examined == 3);

    ExistsResult none = exists_sources_with_stretch(g, 0, 100.0);
    CHECK_FALSE(none.exists);
}

TEST_CASE("exhaustive minimum is a true lower bound for FPS") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = corpus_graph(10, seed + 4000);
        std::size_t n = g.vertex_count();
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
            ExhaustiveResult stretch_opt = optimal_stretch_sources(g, k);
            ExhaustiveResult kcenter_opt = optimal_kcenter_sources(g, k);
            SourceSet fps = farthest_point_sampling(g, k, 0);
            double fps_stretch = stretch_fast(g, build_oracle(g, fps.sources)).stretch;
            double fps_radius = kcenter_radius(g, fps.sources);
            CHECK(stretch_opt.objective <= fps_stretch + 1e-12);
            CHECK(kcenter_opt.objective <= fps_radius + 1e-12);
            CHECK(fps_radius <= 2.0 * kcenter_opt.objective + kBoundTolerance);
        }
    }
}

TEST_CASE("enumeration is deterministic and lexicographic") {
    Graph g = corpus_graph(9, 8);
    std::size_t k = std::min<std::size_t>(2, g.vertex_count());
    ExhaustiveResult a = optimal_stretch_sources(g, k);
    ExhaustiveResult b = optimal_stretch_sources(g, k);
    CHECK(a.objective == b.objective);
    CHECK(a.best_sets == b.best_sets);
    CHECK(std::is_sorted(a.best_sets.begin(), a.best_sets.end()));
}

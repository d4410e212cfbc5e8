#include <doctest.h>

#include <cmath>
#include <sstream>

#include "geostretch/error.hpp"
#include "geostretch/generate.hpp"
#include "geostretch/mesh.hpp"

using namespace geostretch;

namespace {

Mesh single_face() {
    return Mesh(3, {0, 0, 0, 1, 0, 0, 0, 1, 0}, {{0, 1, 2}});
}

Mesh tetrahedron() {
    return Mesh(3, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

bool check_passed(const ValidationReport& report, const std::string& name) {
    for (const auto& c : report.checks) {
        if (c.name == name) return c.passed;
    }
    FAIL("missing check ", name);
    return false;
}

} // namespace

TEST_CASE("single face yields edges 1, 1, sqrt(2)") {
    Graph g = mesh_to_graph(single_face());
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edge_length(0, 1) == 1.0);
    CHECK(g.edge_length(0, 2) == 1.0);
    CHECK(g.edge_length(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("shared face edge appears once in the graph") {
    Mesh mesh(3, {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0}, {{0, 1, 2}, {1, 2, 3}});
    Graph g = mesh_to_graph(mesh);
    CHECK(g.edge_count() == 5); // 6 face-edge slots, (1,2) shared
}

TEST_CASE("coincident vertex positions are degenerate") {
    Mesh mesh(3, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {{0, 1, 2}});
    CHECK_THROWS_AS_MESSAGE(mesh_to_graph(mesh), Error, doctest::Contains("DegenerateEdge"));
}

TEST_CASE("mesh edge count matches distinct graph edges") {
    Mesh mesh = grid_mesh(4, 5);
    Graph g = mesh_to_graph(mesh);
    // rows x cols grid: horizontal + vertical + one diagonal per cell
    std::size_t expected = 3 * 5 + 4 * 4 + 3 * 4;
    CHECK(g.edge_count() == expected);
}

TEST_CASE("validate_triangle_mesh: tetrahedron is a closed manifold") {
    ValidationReport report = validate_triangle_mesh(tetrahedron());
    CHECK(report.passed());
    CHECK(check_passed(report, "edge_face_incidence"));
    CHECK(check_passed(report, "connected"));
    CHECK(check_passed(report, "manifold_vertex_cyclic"));
}

TEST_CASE("validate_triangle_mesh: single triangle (boundary) passes") {
    ValidationReport report = validate_triangle_mesh(single_face());
    CHECK(report.passed());
}

TEST_CASE("validate_triangle_mesh: disconnected components fail connectivity") {
    Mesh mesh(3,
              {0, 0, 0, 1, 0, 0, 0, 1, 0,
               5, 0, 0, 6, 0, 0, 5, 1, 0},
              {{0, 1, 2}, {3, 4, 5}});
    ValidationReport report = validate_triangle_mesh(mesh);
    CHECK_FALSE(report.passed());
    CHECK_FALSE(check_passed(report, "connected"));
    CHECK(check_passed(report, "edge_face_incidence"));
}

TEST_CASE("validate_triangle_mesh: repeated ids and zero-length edges are flagged") {
    Mesh mesh(3, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {{0, 1, 2}, {0, 0, 2}});
    ValidationReport report = validate_triangle_mesh(mesh);
    CHECK_FALSE(check_passed(report, "face_ids_distinct"));
    CHECK_FALSE(check_passed(report, "no_degenerate_faces"));
}

TEST_CASE("informational manifold check does not affect overall pass") {
    // Two triangles joined only at vertex 0: connected, but the link of
    // vertex 0 is two disjoint edges.
    Mesh mesh(3,
              {0, 0, 0, 1, 0, 0, 1, 1, 0,
               -1, 0, 0, -1, -1, 0},
              {{0, 1, 2}, {0, 3, 4}});
    ValidationReport report = validate_triangle_mesh(mesh);
    CHECK_FALSE(check_passed(report, "manifold_vertex_cyclic"));
    CHECK(report.passed());
}

TEST_CASE("OFF round trip") {
    std::ostringstream out;
    write_off(tetrahedron(), out);
    std::istringstream in(out.str());
    Mesh parsed = read_off(in);
    CHECK(parsed.vertex_count() == 4);
    CHECK(parsed.faces().size() == 4);
    CHECK(mesh_to_graph(parsed).checksum() == mesh_to_graph(tetrahedron()).checksum());
}

TEST_CASE("OFF parser rejects non-triangular faces and bad headers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_off(in);
    };
    CHECK_THROWS_AS(parse("3 3 0\n"), Error);
    CHECK_THROWS_AS(parse("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n4 0 1 2 3\n"), Error);
    CHECK_THROWS_AS(parse("OFF\n3 1 0\n0 0 0\n1 0 0\n"), Error);
}

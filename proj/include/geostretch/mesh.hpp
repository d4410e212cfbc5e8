#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "geostretch/graph.hpp"

namespace geostretch {

/// Triangle mesh: points in R^d (default 3) plus faces as vertex-id
/// triples. Distances are measured on the graph induced by vertices and
/// edges; faces only determine which edges exist.
class Mesh {
public:
    Mesh(std::size_t dim, std::vector<double> coords,
         std::vector<std::array<VertexId, 3>> faces);

    std::size_t dim() const { return dim_; }
    std::size_t vertex_count() const { return coords_.size() / dim_; }
    const std::vector<std::array<VertexId, 3>>& faces() const { return faces_; }

    std::span<const double> point(VertexId v) const {
        return {coords_.data() + static_cast<std::size_t>(v) * dim_, dim_};
    }

    double point_distance(VertexId a, VertexId b) const;

private:
    std::size_t dim_;
    std::vector<double> coords_;
    std::vector<std::array<VertexId, 3>> faces_;
};

/// One graph edge per distinct mesh edge, length = Euclidean distance
/// between endpoints. Throws DegenerateEdge when face-adjacent vertices
/// coincide; connectivity errors propagate from build_graph.
Graph mesh_to_graph(const Mesh& mesh);

struct ValidationCheck {
    std::string name;
    bool passed;
    bool informational;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    /// All non-informational checks passed.
    bool passed() const;
};

/// Structural mesh checks: valid distinct face ids, non-degenerate faces,
/// edge-face incidence in {1,2}, connectivity, plus an informational
/// cyclic-ordering (manifold vertex) check. Failures are report entries,
/// never exceptions.
ValidationReport validate_triangle_mesh(const Mesh& mesh);

// OFF format, triangular faces only.
Mesh read_off(std::istream& in);
Mesh load_off(const std::string& path);
void write_off(const Mesh& mesh, std::ostream& out);

} // namespace geostretch

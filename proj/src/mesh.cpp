#include "geostretch/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "geostretch/error.hpp"

namespace geostretch {

Mesh::Mesh(std::size_t dim, std::vector<double> coords,
           std::vector<std::array<VertexId, 3>> faces)
    : dim_(dim), coords_(std::move(coords)), faces_(std::move(faces)) {
    if (dim_ == 0 || coords_.size() % dim_ != 0) {
        throw Error(Errc::ParseError, "coordinate array size is not a multiple of dim");
    }
    std::size_t n = coords_.size() / dim_;
    for (const auto& face : faces_) {
        for (VertexId v : face) {
            if (v >= n) {
                throw Error(Errc::InvalidVertexId,
                            "face references vertex " + std::to_string(v) + " of " +
                                std::to_string(n));
            }
        }
    }
}

double Mesh::point_distance(VertexId a, VertexId b) const {
    auto pa = point(a);
    auto pb = point(b);
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double d = pa[i] - pb[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

std::vector<std::pair<VertexId, VertexId>> distinct_mesh_edges(const Mesh& mesh) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& face : mesh.faces()) {
        for (int i = 0; i < 3; ++i) {
            VertexId a = face[i];
            VertexId b = face[(i + 1) % 3];
            if (a == b) continue;
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return {edges.begin(), edges.end()};
}

} // namespace

Graph mesh_to_graph(const Mesh& mesh) {
    for (const auto& face : mesh.faces()) {
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
            throw Error(Errc::DegenerateEdge, "face with repeated vertex ids");
        }
    }
    std::vector<Edge> edges;
    for (auto [a, b] : distinct_mesh_edges(mesh)) {
        double length = mesh.point_distance(a, b);
        if (!(length > 0.0)) {
            throw Error(Errc::DegenerateEdge,
                        "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                            " coincide geometrically");
        }
        edges.push_back({a, b, length});
    }
    return build_graph(mesh.vertex_count(), std::move(edges));
}

bool ValidationReport::passed() const {
    for (const auto& check : checks) {
        if (!check.informational && !check.passed) return false;
    }
    return true;
}

namespace {

// Triangles around a vertex can be ordered cyclically iff the link edges
// form a single simple path or cycle.
bool vertex_link_is_cyclic(const Mesh& mesh, VertexId v,
                           const std::vector<std::vector<std::size_t>>& faces_of_vertex) {
    const auto& incident = faces_of_vertex[v];
    if (incident.empty()) return true;
    std::map<VertexId, int> link_degree;
    std::map<std::pair<VertexId, VertexId>, int> link_edge_count;
    for (std::size_t fi : incident) {
        const auto& face = mesh.faces()[fi];
        VertexId others[2];
        int idx = 0;
        for (VertexId w : face) {
            if (w != v) others[idx++] = w;
        }
        if (idx != 2) return false;
        VertexId a = std::min(others[0], others[1]);
        VertexId b = std::max(others[0], others[1]);
        ++link_degree[a];
        ++link_degree[b];
        ++link_edge_count[{a, b}];
    }
    for (const auto& [edge, count] : link_edge_count) {
        if (count > 1) return false; // two faces on the same corner wedge
    }
    for (const auto& [w, deg] : link_degree) {
        if (deg > 2) return false;
    }
    // Connectivity of the link: walk from any link vertex.
    std::map<VertexId, std::vector<VertexId>> link_adj;
    for (const auto& [edge, count] : link_edge_count) {
        link_adj[edge.first].push_back(edge.second);
        link_adj[edge.second].push_back(edge.first);
    }
    std::set<VertexId> seen;
    std::vector<VertexId> stack{link_adj.begin()->first};
    while (!stack.empty()) {
        VertexId w = stack.back();
        stack.pop_back();
        if (!seen.insert(w).second) continue;
        for (VertexId x : link_adj[w]) stack.push_back(x);
    }
    return seen.size() == link_degree.size();
}

} // namespace

ValidationReport validate_triangle_mesh(const Mesh& mesh) {
    ValidationReport report;

    // Faces are stored as triples, so non-triangular faces cannot be
    // represented at all.
    report.checks.push_back({"faces_are_triples", true, false, "structural (triple-only format)"});

    std::size_t degenerate_ids = 0;
    for (const auto& face : mesh.faces()) {
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) ++degenerate_ids;
    }
    report.checks.push_back({"face_ids_distinct", degenerate_ids == 0, false,
                             degenerate_ids == 0
                                 ? "all faces reference three distinct vertices"
                                 : std::to_string(degenerate_ids) + " faces with repeated ids"});

    std::size_t zero_length = 0;
    for (const auto& face : mesh.faces()) {
        for (int i = 0; i < 3; ++i) {
            VertexId a = face[i], b = face[(i + 1) % 3];
            if (a != b && !(mesh.point_distance(a, b) > 0.0)) ++zero_length;
        }
    }
    report.checks.push_back({"no_degenerate_faces", zero_length == 0, false,
                             zero_length == 0 ? "no geometrically collapsed edges"
                                              : std::to_string(zero_length) +
                                                    " face edges of zero length"});

    // Edge-face incidence: every edge borders one or two triangles.
    std::map<std::pair<VertexId, VertexId>, int> incidence;
    for (const auto& face : mesh.faces()) {
        for (int i = 0; i < 3; ++i) {
            VertexId a = face[i], b = face[(i + 1) % 3];
            if (a == b) continue;
            ++incidence[{std::min(a, b), std::max(a, b)}];
        }
    }
    std::size_t bad_incidence = 0;
    for (const auto& [edge, count] : incidence) {
        if (count < 1 || count > 2) ++bad_incidence;
    }
    report.checks.push_back({"edge_face_incidence", bad_incidence == 0, false,
                             bad_incidence == 0
                                 ? "every edge borders 1 or 2 faces"
                                 : std::to_string(bad_incidence) + " edges border >2 faces"});

    std::vector<Edge> plain_edges;
    for (const auto& [edge, count] : incidence) {
        plain_edges.push_back({edge.first, edge.second, 1.0});
    }
    auto components = connected_components(mesh.vertex_count(), plain_edges);
    report.checks.push_back({"connected", components.size() == 1, false,
                             std::to_string(components.size()) + " components"});

    std::vector<std::vector<std::size_t>> faces_of_vertex(mesh.vertex_count());
    for (std::size_t fi = 0; fi < mesh.faces().size(); ++fi) {
        for (VertexId v : mesh.faces()[fi]) {
            if (faces_of_vertex[v].empty() || faces_of_vertex[v].back() != fi) {
                faces_of_vertex[v].push_back(fi);
            }
        }
    }
    std::size_t non_manifold = 0;
    for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
        if (!vertex_link_is_cyclic(mesh, v, faces_of_vertex)) ++non_manifold;
    }
    report.checks.push_back({"manifold_vertex_cyclic", non_manifold == 0, true,
                             non_manifold == 0
                                 ? "triangles order cyclically around every vertex"
                                 : std::to_string(non_manifold) + " non-manifold vertices"});

    return report;
}

Mesh read_off(std::istream& in) {
    auto next_line = [&](std::string& line) {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw Error(Errc::ParseError, "empty OFF file");
    {
        std::istringstream header(line);
        std::string tag;
        header >> tag;
        if (tag != "OFF") throw Error(Errc::ParseError, "missing OFF header");
    }
    if (!next_line(line)) throw Error(Errc::ParseError, "missing OFF counts line");
    std::size_t nv = 0, nf = 0, ne = 0;
    {
        std::istringstream counts(line);
        if (!(counts >> nv >> nf >> ne)) {
            throw Error(Errc::ParseError, "bad OFF counts line");
        }
    }
    std::vector<double> coords;
    coords.reserve(nv * 3);
    for (std::size_t i = 0; i < nv; ++i) {
        if (!next_line(line)) throw Error(Errc::ParseError, "OFF file truncated in vertex list");
        std::istringstream row(line);
        double x, y, z;
        if (!(row >> x >> y >> z)) {
            throw Error(Errc::ParseError, "bad OFF vertex line: '" + line + "'");
        }
        coords.push_back(x);
        coords.push_back(y);
        coords.push_back(z);
    }
    std::vector<std::array<VertexId, 3>> faces;
    faces.reserve(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        if (!next_line(line)) throw Error(Errc::ParseError, "OFF file truncated in face list");
        std::istringstream row(line);
        std::size_t count;
        long long a, b, c;
        if (!(row >> count >> a >> b >> c) || count != 3) {
            throw Error(Errc::ParseError, "only triangular faces accepted: '" + line + "'");
        }
        if (a < 0 || b < 0 || c < 0 || static_cast<std::size_t>(a) >= nv ||
            static_cast<std::size_t>(b) >= nv || static_cast<std::size_t>(c) >= nv) {
            throw Error(Errc::InvalidVertexId, "face vertex out of range: '" + line + "'");
        }
        faces.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b),
                         static_cast<VertexId>(c)});
    }
    return Mesh(3, std::move(coords), std::move(faces));
}

Mesh load_off(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
    return read_off(in);
}

void write_off(const Mesh& mesh, std::ostream& out) {
    if (mesh.dim() != 3) throw Error(Errc::IoError, "OFF output requires dim 3");
    out << "OFF\n" << mesh.vertex_count() << " " << mesh.faces().size() << " 0\n";
    out.precision(17);
    for (VertexId v = 0; v < mesh.vertex_count(); ++v) {
        auto p = mesh.point(v);
        out << p[0] << " " << p[1] << " " << p[2] << "\n";
    }
    for (const auto& face : mesh.faces()) {
        out << "3 " << face[0] << " " << face[1] << " " << face[2] << "\n";
    }
}

} // namespace geostretch

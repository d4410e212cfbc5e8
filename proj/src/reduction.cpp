#include "geostretch/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "geostretch/error.hpp"
#include "geostretch/exhaustive.hpp"
#include "geostretch/oracle.hpp"

namespace geostretch {

namespace {

bool unit_step(const GridPoint& a, const GridPoint& b) {
    int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx + dy == 1;
}

std::string point_str(const GridPoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

} // namespace

void validate_embedding(const PlanarEmbedding& embedding) {
    std::size_t n = embedding.vertex_coords.size();
    if (n == 0) {
        throw Error(Errc::ParseError, "embedding has no vertices");
    }
    std::map<std::pair<int, int>, VertexId> vertex_at;
    for (VertexId v = 0; v < n; ++v) {
        const GridPoint& p = embedding.vertex_coords[v];
        auto [it, inserted] = vertex_at.try_emplace({p.x, p.y}, v);
        if (!inserted) {
            throw Error(Errc::OverlappingPolylines,
                        "vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                            " share grid point " + point_str(p));
        }
    }

    std::vector<std::size_t> degree(n, 0);
    std::set<std::pair<VertexId, VertexId>> seen_edges;
    std::map<std::pair<int, int>, std::size_t> interior_at;
    for (std::size_t ei = 0; ei < embedding.edges.size(); ++ei) {
        const auto& edge = embedding.edges[ei];
        if (edge.u >= n || edge.v >= n) {
            throw Error(Errc::InvalidVertexId, "edge endpoint out of range");
        }
        if (edge.u == edge.v) {
            throw Error(Errc::MalformedPolyline, "self-loop at vertex " + std::to_string(edge.u));
        }
        auto key = std::minmax(edge.u, edge.v);
        if (!seen_edges.insert({key.first, key.second}).second) {
            throw Error(Errc::MalformedPolyline,
                        "duplicate edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
        }
        ++degree[edge.u];
        ++degree[edge.v];

        const auto& pts = edge.points;
        if (pts.size() < 2) {
            throw Error(Errc::MalformedPolyline, "polyline needs at least two points");
        }
        if (!(pts.front() == embedding.vertex_coords[edge.u]) ||
            !(pts.back() == embedding.vertex_coords[edge.v])) {
            throw Error(Errc::MalformedPolyline,
                        "polyline of edge (" + std::to_string(edge.u) + "," +
                            std::to_string(edge.v) + ") does not join its endpoints");
        }
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (!unit_step(pts[i - 1], pts[i])) {
                throw Error(Errc::MalformedPolyline,
                            "segment " + point_str(pts[i - 1]) + "-" + point_str(pts[i]) +
                                " is not a unit axis-aligned step");
            }
        }
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (vertex_at.count({pts[i].x, pts[i].y})) {
                throw Error(Errc::OverlappingPolylines,
                            "polyline passes through vertex at " + point_str(pts[i]));
            }
            auto [it, inserted] = interior_at.try_emplace({pts[i].x, pts[i].y}, ei);
            if (!inserted) {
                throw Error(Errc::OverlappingPolylines,
                            "interior grid point " + point_str(pts[i]) + " shared by edges " +
                                std::to_string(it->second) + " and " + std::to_string(ei));
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] > 3) {
            throw Error(Errc::DegreeTooHigh, "vertex " + std::to_string(v) + " has degree " +
                                                 std::to_string(degree[v]) + " > 3");
        }
    }
}

PlanarEmbedding read_embedding(std::istream& in) {
    PlanarEmbedding embedding;
    std::map<long long, GridPoint> vertices;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string tag;
        if (!(row >> tag)) continue;
        if (tag == "v") {
            long long id;
            int x, y;
            if (!(row >> id >> x >> y)) {
                throw Error(Errc::ParseError, "bad v line " + std::to_string(line_no));
            }
            if (id < 0 || !vertices.try_emplace(id, GridPoint{x, y}).second) {
                throw Error(Errc::ParseError,
                            "bad or repeated vertex id on line " + std::to_string(line_no));
            }
        } else if (tag == "e") {
            long long u, v;
            std::string colon;
            if (!(row >> u >> v >> colon) || colon != ":") {
                throw Error(Errc::ParseError, "bad e line " + std::to_string(line_no));
            }
            PlanarEmbedding::EdgePolyline polyline;
            if (u < 0 || v < 0) {
                throw Error(Errc::ParseError, "bad e line " + std::to_string(line_no));
            }
            polyline.u = static_cast<VertexId>(u);
            polyline.v = static_cast<VertexId>(v);
            int x, y;
            while (row >> x >> y) {
                polyline.points.push_back({x, y});
            }
            if (!row.eof()) {
                throw Error(Errc::ParseError,
                            "trailing tokens on e line " + std::to_string(line_no));
            }
            embedding.edges.push_back(std::move(polyline));
        } else {
            throw Error(Errc::ParseError,
                        "unknown tag '" + tag + "' on line " + std::to_string(line_no));
        }
    }
    // Dense ids 0..n-1; gaps are rejected.
    std::size_t n = vertices.size();
    embedding.vertex_coords.resize(n);
    for (const auto& [id, point] : vertices) {
        if (static_cast<std::size_t>(id) >= n) {
            throw Error(Errc::ParseError,
                        "vertex ids must be dense 0..n-1, got " + std::to_string(id));
        }
        embedding.vertex_coords[static_cast<std::size_t>(id)] = point;
    }
    validate_embedding(embedding);
    return embedding;
}

PlanarEmbedding load_embedding(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
    return read_embedding(in);
}

std::pair<Graph, SubdivisionRecord> subdivide(const PlanarEmbedding& embedding) {
    validate_embedding(embedding);
    std::size_t n = embedding.vertex_coords.size();

    SubdivisionRecord record;
    record.k_e.reserve(embedding.edges.size());
    record.node_roles.assign(n, NodeRole::Regular);
    record.node_coords_x2.reserve(n);
    for (const GridPoint& p : embedding.vertex_coords) {
        record.node_coords_x2.push_back({2 * p.x, 2 * p.y});
    }

    struct PendingEdge {
        Edge edge;
        std::uint32_t origin;
    };
    std::vector<PendingEdge> pending;
    VertexId next_id = static_cast<VertexId>(n);
    for (std::size_t ei = 0; ei < embedding.edges.size(); ++ei) {
        const auto& poly = embedding.edges[ei];
        std::size_t len = poly.points.size() - 1; // unit segments
        bool split_first = ((len - 1) % 2) != 0;  // make the auxiliary count even

        // Chain of nodes from u to v: optional half-integer midpoint of the
        // first segment, then the interior integer grid points.
        VertexId prev = poly.u;
        std::uint32_t aux_count = 0;
        auto add_aux = [&](GridPoint coords_x2, double length) {
            VertexId id = next_id++;
            record.node_roles.push_back(NodeRole::Auxiliary);
            record.node_coords_x2.push_back(coords_x2);
            pending.push_back({{prev, id, length}, static_cast<std::uint32_t>(ei)});
            prev = id;
            ++aux_count;
        };
        if (split_first) {
            GridPoint mid{poly.points[0].x + poly.points[1].x,
                          poly.points[0].y + poly.points[1].y};
            add_aux(mid, 0.5);
        }
        for (std::size_t i = 1; i + 1 < poly.points.size(); ++i) {
            double length = (i == 1 && split_first) ? 0.5 : 1.0;
            add_aux({2 * poly.points[i].x, 2 * poly.points[i].y}, length);
        }
        pending.push_back({{prev, poly.v, 1.0}, static_cast<std::uint32_t>(ei)});

        record.k_e.push_back(aux_count / 2);
        record.m += aux_count / 2;
    }

    // Match build_graph's canonical (u < v, sorted) edge order so that
    // edge_origin[i] describes graph.edges()[i].
    for (auto& p : pending) {
        if (p.edge.u > p.edge.v) std::swap(p.edge.u, p.edge.v);
    }
    std::sort(pending.begin(), pending.end(), [](const PendingEdge& a, const PendingEdge& b) {
        return a.edge.u != b.edge.u ? a.edge.u < b.edge.u : a.edge.v < b.edge.v;
    });
    std::vector<Edge> edges;
    edges.reserve(pending.size());
    record.edge_origin.reserve(pending.size());
    for (const auto& p : pending) {
        edges.push_back(p.edge);
        record.edge_origin.push_back(p.origin);
    }
    Graph g_r = build_graph(next_id, std::move(edges));
    return {std::move(g_r), std::move(record)};
}

GadgetParams gadget_params(double xi, double edge_length) {
    if (!(xi >= 3.0)) {
        throw Error(Errc::XiTooSmall, "xi = " + std::to_string(xi) + " < 3");
    }
    double L = edge_length / 2.0;
    return {xi, L, 2.0 * L / xi};
}

ReductionInstance gadget_replace(const Graph& g_r, const SubdivisionRecord& record,
                                 double xi, std::size_t k) {
    if (!(xi >= 3.0)) {
        throw Error(Errc::XiTooSmall, "xi = " + std::to_string(xi) + " < 3");
    }
    std::size_t base = g_r.vertex_count();
    std::size_t gadget_count = g_r.edge_count();

    ReductionInstance instance;
    instance.xi = xi;
    instance.m = record.m;
    instance.source_budget = k + record.m;
    instance.gadgets.reserve(gadget_count);
    instance.faces.reserve(2 * gadget_count);

    std::vector<Edge> edges;
    edges.reserve(5 * gadget_count);
    for (std::size_t gi = 0; gi < gadget_count; ++gi) {
        const Edge& e = g_r.edges()[gi];
        GadgetParams params = gadget_params(xi, e.length);
        auto a = static_cast<VertexId>(base + 2 * gi);
        auto b = static_cast<VertexId>(base + 2 * gi + 1);
        edges.push_back({e.u, a, params.L});
        edges.push_back({e.u, b, params.L});
        edges.push_back({e.v, a, params.L});
        edges.push_back({e.v, b, params.L});
        edges.push_back({a, b, params.w});
        instance.faces.push_back({e.u, a, b});
        instance.faces.push_back({e.v, a, b});
        std::uint32_t origin =
            gi < record.edge_origin.size() ? record.edge_origin[gi] : 0;
        instance.gadgets.push_back(
            {e.u, e.v, a, b, static_cast<std::uint32_t>(gi), origin, params.L, params.w});
    }
    instance.g_prime = build_graph(base + 2 * gadget_count, std::move(edges));
    return instance;
}

namespace {

double pair_ratio(const Oracle& oracle, const DistanceTable& apsp, VertexId p, VertexId q) {
    return oracle.approx_distance(p, q).value / apsp.at(p, q);
}

} // namespace

std::vector<GadgetCaseEntry> gadget_case_table(const GadgetParams& params) {
    std::vector<GadgetCaseEntry> table;

    // Single gadget, source u. Node ids: u=0, v=1, a=2, b=3.
    {
        constexpr VertexId u = 0, v = 1, a = 2, b = 3;
        Graph g = build_graph(4, {{u, a, params.L},
                                  {u, b, params.L},
                                  {v, a, params.L},
                                  {v, b, params.L},
                                  {a, b, params.w}});
        Oracle oracle = build_oracle(g, std::vector<VertexId>{u});
        DistanceTable apsp = multi_sssp(g, {0, 1, 2, 3});
        table.push_back({"same_gadget:a,b", a, b, pair_ratio(oracle, apsp, a, b)});
        table.push_back({"same_gadget:v,a", v, a, pair_ratio(oracle, apsp, v, a)});
        table.push_back({"same_gadget:v,b", v, b, pair_ratio(oracle, apsp, v, b)});
        table.push_back({"same_gadget:u,v", u, v, pair_ratio(oracle, apsp, u, v)});
        table.push_back({"same_gadget:u,a", u, a, pair_ratio(oracle, apsp, u, a)});
        table.push_back({"same_gadget:u,b", u, b, pair_ratio(oracle, apsp, u, b)});
    }

    // Two adjacent unit gadgets, sources u1 and v2. Node ids:
    // u1=0, v1=1, v2=2, a1=3, b1=4, a2=5, b2=6.
    {
        GadgetParams unit = gadget_params(params.xi, 1.0);
        constexpr VertexId u1 = 0, v1 = 1, v2 = 2, a1 = 3, b1 = 4, a2 = 5, b2 = 6;
        Graph g = build_graph(7, {{u1, a1, unit.L},
                                  {u1, b1, unit.L},
                                  {v1, a1, unit.L},
                                  {v1, b1, unit.L},
                                  {a1, b1, unit.w},
                                  {v1, a2, unit.L},
                                  {v1, b2, unit.L},
                                  {v2, a2, unit.L},
                                  {v2, b2, unit.L},
                                  {a2, b2, unit.w}});
        Oracle oracle = build_oracle(g, std::vector<VertexId>{u1, v2});
        DistanceTable apsp = multi_sssp(g, {0, 1, 2, 3, 4, 5, 6});
        // Cross pairs: one node strictly in gadget 1, the other strictly in
        // gadget 2 (the shared v1 belongs to both).
        const VertexId left[] = {u1, a1, b1};
        const VertexId right[] = {v2, a2, b2};
        double worst = 0.0;
        VertexId wp = left[0], wq = right[0];
        for (VertexId p : left) {
            for (VertexId q : right) {
                double ratio = pair_ratio(oracle, apsp, p, q);
                if (ratio > worst) {
                    worst = ratio;
                    wp = p;
                    wq = q;
                }
            }
        }
        table.push_back({"cross_gadget:max", wp, wq, worst});
    }
    return table;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(g.edge_count());
    for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v});
    return pairs;
}

std::vector<std::pair<VertexId, VertexId>> embedding_edge_pairs(const PlanarEmbedding& embedding) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(embedding.edges.size());
    for (const auto& e : embedding.edges) {
        pairs.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    return pairs;
}

} // namespace

VcEquivalenceReport vc_equivalence_check(const PlanarEmbedding& embedding,
                                         std::uint64_t budget) {
    auto [g_r, record] = subdivide(embedding);
    std::size_t n = embedding.vertex_coords.size();

    auto vc_g = minimum_vertex_cover(n, embedding_edge_pairs(embedding), n, budget);
    auto vc_gr = minimum_vertex_cover(g_r.vertex_count(), edge_pairs(g_r),
                                      g_r.vertex_count(), budget);

    VcEquivalenceReport report;
    report.vc_min_g = static_cast<std::uint32_t>(vc_g->objective);
    report.vc_min_gr = static_cast<std::uint32_t>(vc_gr->objective);
    report.m = record.m;
    report.all_agree = true;
    for (std::uint32_t k = 0; k <= n; ++k) {
        bool lhs = report.vc_min_g <= k;
        bool rhs = report.vc_min_gr <= k + record.m;
        bool agree = lhs == rhs;
        report.rows.push_back({k, lhs, rhs, agree});
        if (!agree) report.all_agree = false;
    }
    return report;
}

SourceEquivalenceReport source_equivalence_check(const PlanarEmbedding& embedding, double xi,
                                                 std::uint64_t budget) {
    auto [g_r, record] = subdivide(embedding);
    ReductionInstance instance = gadget_replace(g_r, record, xi);
    std::size_t n = embedding.vertex_coords.size();

    auto vc_g = minimum_vertex_cover(n, embedding_edge_pairs(embedding), n, budget);

    SourceEquivalenceReport report;
    report.xi = xi;
    report.m = record.m;
    report.vc_min_g = static_cast<std::uint32_t>(vc_g->objective);
    report.all_agree = true;
    for (std::uint32_t k = 0; k <= n; ++k) {
        bool lhs = report.vc_min_g <= k;
        bool rhs = exists_sources_with_stretch(instance.g_prime, k + record.m, xi, budget).exists;
        bool agree = lhs == rhs;
        report.rows.push_back({k, lhs, rhs, agree});
        if (!agree) report.all_agree = false;
    }
    return report;
}

} // namespace geostretch

#include "geostretch/analysis.hpp"

#include <algorithm>
#include <limits>

#include "geostretch/error.hpp"
#include "geostretch/parallel.hpp"

namespace geostretch {

namespace {

void require_matching(const Graph& g, const Oracle& oracle) {
    if (oracle.vertex_count() != g.vertex_count() ||
        oracle.graph_checksum() != g.checksum()) {
        throw Error(Errc::GraphOracleMismatch, "oracle was not built for this graph");
    }
}

/// Covering radius max_p d(p, s_p) straight from the table.
double covering_radius(const Oracle& oracle) {
    std::size_t n = oracle.vertex_count();
    std::size_t k = oracle.source_count();
    double radius = 0.0;
    for (VertexId v = 0; v < n; ++v) {
        double nearest = oracle.at(0, v);
        for (std::size_t i = 1; i < k; ++i) {
            nearest = std::min(nearest, oracle.at(i, v));
        }
        radius = std::max(radius, nearest);
    }
    return radius;
}

} // namespace

BoundCheck make_bound_check(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, rhs, lhs <= rhs + kBoundTolerance, rhs - lhs};
}

StretchReport stretch_fast(const Graph& g, const Oracle& oracle) {
    require_matching(g, oracle);
    if (g.edge_count() == 0) {
        throw Error(Errc::EmptyEdgeSet, "stretch is undefined without edges");
    }
    const auto& edges = g.edges();
    std::vector<double> ratios(edges.size());
    parallel_for(edges.size(), [&](std::size_t begin, std::size_t end) {
        ShortestPathWorkspace workspace(g);
        for (std::size_t i = begin; i < end; ++i) {
            double numer = oracle.approx_distance(edges[i].u, edges[i].v).value;
            double denom = workspace.endpoint_distance(edges[i].u, edges[i].v);
            ratios[i] = numer / denom;
        }
    });
    // Sequential reduction over the canonical edge order keeps the witness
    // at the smallest (p, q) among maximizers.
    std::size_t best = 0;
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        if (ratios[i] > ratios[best]) best = i;
    }
    StretchReport report;
    report.stretch = ratios[best];
    report.p = edges[best].u;
    report.q = edges[best].v;
    report.witness_source = oracle.approx_distance(report.p, report.q).witness_source;
    report.method = StretchMethod::Fast;
    report.pairs_examined = edges.size();
    return report;
}

StretchReport stretch_naive(const Graph& g, const Oracle& oracle, std::size_t naive_cap) {
    require_matching(g, oracle);
    std::size_t n = g.vertex_count();
    if (n > naive_cap) {
        throw Error(Errc::GraphTooLargeForNaive,
                    "n = " + std::to_string(n) + " exceeds cap " + std::to_string(naive_cap));
    }
    if (g.edge_count() == 0) {
        throw Error(Errc::EmptyEdgeSet, "stretch is undefined without edges");
    }
    StretchReport report;
    report.stretch = 0.0;
    report.p = 0;
    report.q = 0;
    report.method = StretchMethod::Naive;
    report.pairs_examined = 0;
    for (VertexId p = 0; p < n; ++p) {
        DistanceRow row = sssp(g, p);
        for (VertexId q = 0; q < n; ++q) {
            if (q == p) continue;
            ++report.pairs_examined;
            double ratio = oracle.approx_distance(p, q).value / row.dist[q];
            if (ratio > report.stretch) {
                report.stretch = ratio;
                report.p = p;
                report.q = q;
            }
        }
    }
    report.witness_source = oracle.approx_distance(report.p, report.q).witness_source;
    return report;
}

SandwichChecks check_radius_sandwich(const Graph& g, const Oracle& oracle) {
    require_matching(g, oracle);
    EdgeStats stats = edge_stats(g);
    double radius = covering_radius(oracle);
    double stretch = stretch_fast(g, oracle).stretch;
    return {
        make_bound_check("radius_sandwich.lower", 2.0 * radius / stats.l_max - 1.0, stretch),
        make_bound_check("radius_sandwich.upper", stretch, 2.0 * radius / stats.l_min + 1.0),
    };
}

std::vector<RoutingViolation> check_routing_inequality(const Graph& g, const Oracle& oracle,
                                                        std::size_t naive_cap) {
    require_matching(g, oracle);
    std::size_t n = g.vertex_count();
    if (n > naive_cap) {
        throw Error(Errc::GraphTooLargeForNaive,
                    "n = " + std::to_string(n) + " exceeds cap " + std::to_string(naive_cap));
    }
    std::vector<RoutingViolation> violations;
    for (VertexId u = 0; u < n; ++u) {
        DistanceRow row = sssp(g, u); // d(u, .)
        std::size_t su = oracle.nearest_source_index(u);
        double d_u_su = oracle.at(su, u);
        for (VertexId v = 0; v < n; ++v) {
            double lhs = d_u_su + oracle.at(su, v);
            double rhs = oracle.approx_distance(u, v).value + 2.0 * row.dist[v];
            if (lhs > rhs + kBoundTolerance) {
                violations.push_back({u, v, lhs, rhs});
            }
        }
    }
    return violations;
}

BoundCheck check_fps_vs_kcenter_stretch(const Graph& g,
                                        const std::vector<VertexId>& fps_sources,
                                        const std::vector<VertexId>& kcenter_opt_sources) {
    if (fps_sources.size() != kcenter_opt_sources.size()) {
        throw Error(Errc::SourceSetSizeMismatch,
                    std::to_string(fps_sources.size()) + " vs " +
                        std::to_string(kcenter_opt_sources.size()) + " sources");
    }
    EdgeStats stats = edge_stats(g);
    double f_fps = stretch_fast(g, build_oracle(g, fps_sources)).stretch;
    double f_opt = stretch_fast(g, build_oracle(g, kcenter_opt_sources)).stretch;
    return make_bound_check("fps_vs_kcenter_stretch", f_fps,
                            2.0 * stats.r_e * f_opt + 6.0 * stats.r_e + 1.0);
}

BoundCheck check_fps_vs_optimal_stretch(const Graph& g,
                                        const std::vector<VertexId>& fps_sources,
                                        double optimal_stretch) {
    EdgeStats stats = edge_stats(g);
    double f_fps = stretch_fast(g, build_oracle(g, fps_sources)).stretch;
    double re2 = stats.r_e * stats.r_e;
    return make_bound_check("fps_vs_optimal_stretch", f_fps,
                            2.0 * re2 * optimal_stretch + 2.0 * re2 + 8.0 * stats.r_e + 1.0);
}

} // namespace geostretch

#pragma once

// Test-only reference oracles, independent of the library's Dijkstra path:
// Bellman-Ford style relaxation to a fixed point, plus brute-force
// evaluations built on top of it.

#include <limits>
#include <random>
#include <vector>

#include "geostretch/graph.hpp"
#include "geostretch/generate.hpp"

namespace geostretch::testing {

inline std::vector<double> bellman_ford(const Graph& g, VertexId source) {
    std::size_t n = g.vertex_count();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    dist[source] = 0.0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : g.edges()) {
            if (dist[e.u] + e.length < dist[e.v]) {
                dist[e.v] = dist[e.u] + e.length;
                changed = true;
            }
            if (dist[e.v] + e.length < dist[e.u]) {
                dist[e.u] = dist[e.v] + e.length;
                changed = true;
            }
        }
    }
    return dist;
}

inline std::vector<std::vector<double>> bf_apsp(const Graph& g) {
    std::vector<std::vector<double>> rows;
    rows.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        rows.push_back(bellman_ford(g, v));
    }
    return rows;
}

/// Literal stretch definition over all ordered pairs, from BF distances.
inline double bf_stretch(const Graph& g, const std::vector<VertexId>& sources) {
    auto apsp = bf_apsp(g);
    std::size_t n = g.vertex_count();
    double worst = 0.0;
    for (VertexId p = 0; p < n; ++p) {
        for (VertexId q = 0; q < n; ++q) {
            if (p == q) continue;
            double best = std::numeric_limits<double>::infinity();
            for (VertexId s : sources) {
                best = std::min(best, apsp[s][p] + apsp[s][q]);
            }
            worst = std::max(worst, best / apsp[p][q]);
        }
    }
    return worst;
}

inline double bf_kcenter_radius(const Graph& g, const std::vector<VertexId>& sources) {
    std::size_t n = g.vertex_count();
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    for (VertexId s : sources) {
        auto dist = bellman_ford(g, s);
        for (VertexId v = 0; v < n; ++v) nearest[v] = std::min(nearest[v], dist[v]);
    }
    double radius = 0.0;
    for (double d : nearest) radius = std::max(radius, d);
    return radius;
}

inline Graph unit_path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) {
        edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(v + 1), 1.0});
    }
    return build_graph(n, std::move(edges));
}

/// Mixed corpus entry: alternates unit and [0.5, 2] lengths across seeds.
inline Graph corpus_graph(std::size_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> n_dist(2, max_n);
    std::size_t n = n_dist(rng);
    std::uniform_int_distribution<std::size_t> extra_dist(0, n);
    bool unit = (seed % 2) == 0;
    return random_connected_graph(n, extra_dist(rng), unit, seed * 7919 + 17);
}

} // namespace geostretch::testing

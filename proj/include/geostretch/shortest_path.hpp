#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "geostretch/graph.hpp"

namespace geostretch {

/// Exact single-source geodesic distances with predecessor tree.
/// parent[source] = kNoParent; walking parents from any vertex reaches the
/// source and the edge lengths along the walk sum to dist.
struct DistanceRow {
    VertexId source;
    std::vector<double> dist;
    std::vector<std::int32_t> parent;
};

/// Binary-heap Dijkstra with lazy deletion; frontier ties broken by
/// smaller vertex id, so the parent tree is deterministic.
DistanceRow sssp(const Graph& g, VertexId source);

/// k rows of exact distances, source-major. Row i is sssp from sources[i].
struct DistanceTable {
    std::vector<VertexId> sources;
    std::size_t n = 0;
    std::vector<double> values; // k * n, row-major

    double at(std::size_t i, VertexId v) const { return values[i * n + v]; }
    std::span<const double> row(std::size_t i) const { return {values.data() + i * n, n}; }
};

/// Rows are independent work items and run in parallel under the
/// thread_count() cap; the result is deterministic regardless of schedule.
DistanceTable multi_sssp(const Graph& g, const std::vector<VertexId>& sources);

/// Exact d(u, v) for an edge (u, v), which may be shorter than the edge
/// itself. Dijkstra from u truncated once v settles or the frontier
/// minimum exceeds the edge length. Throws NotAdjacent.
double edge_endpoint_distance(const Graph& g, VertexId u, VertexId v);

/// Reusable buffers for repeated truncated searches on one graph
/// (timestamped, so each query costs only what it visits). Not
/// thread-safe; use one instance per thread.
class ShortestPathWorkspace {
public:
    explicit ShortestPathWorkspace(const Graph& g);

    double endpoint_distance(VertexId u, VertexId v);

private:
    const Graph* graph_;
    std::vector<double> dist_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::vector<std::pair<double, VertexId>> heap_;
};

} // namespace geostretch

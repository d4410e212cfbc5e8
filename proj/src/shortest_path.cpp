#include "geostretch/shortest_path.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "geostretch/error.hpp"
#include "geostretch/parallel.hpp"

namespace geostretch {

namespace {

using HeapEntry = std::pair<double, VertexId>; // (distance, vertex), min on both

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

DistanceRow sssp(const Graph& g, VertexId source) {
    std::size_t n = g.vertex_count();
    if (source >= n) {
        throw Error(Errc::InvalidVertexId, "source " + std::to_string(source) + " out of range");
    }
    DistanceRow row;
    row.source = source;
    row.dist.assign(n, kInf);
    row.parent.assign(n, kNoParent);
    std::vector<bool> settled(n, false);

    // Lazy-deletion binary heap; (dist, id) ordering settles equal-distance
    // frontier entries at the smallest vertex id first.
    std::vector<HeapEntry> heap;
    row.dist[source] = 0.0;
    heap.push_back({0.0, source});
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
        auto [d, u] = heap.back();
        heap.pop_back();
        if (settled[u]) continue;
        settled[u] = true;
        for (const auto& nb : g.neighbors(u)) {
            double candidate = d + nb.length;
            if (candidate < row.dist[nb.to]) {
                row.dist[nb.to] = candidate;
                row.parent[nb.to] = static_cast<std::int32_t>(u);
                heap.push_back({candidate, nb.to});
                std::push_heap(heap.begin(), heap.end(), std::greater<>{});
            }
        }
    }
    return row;
}

DistanceTable multi_sssp(const Graph& g, const std::vector<VertexId>& sources) {
    if (sources.empty()) {
        throw Error(Errc::EmptySourceSet, "multi_sssp needs at least one source");
    }
    std::set<VertexId> distinct;
    for (VertexId s : sources) {
        if (s >= g.vertex_count()) {
            throw Error(Errc::InvalidVertexId, "source " + std::to_string(s) + " out of range");
        }
        if (!distinct.insert(s).second) {
            throw Error(Errc::DuplicateSource, "source " + std::to_string(s) + " repeated");
        }
    }
    DistanceTable table;
    table.sources = sources;
    table.n = g.vertex_count();
    table.values.resize(sources.size() * table.n);
    parallel_for(sources.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            DistanceRow row = sssp(g, sources[i]);
            std::copy(row.dist.begin(), row.dist.end(), table.values.begin() + i * table.n);
        }
    });
    return table;
}

ShortestPathWorkspace::ShortestPathWorkspace(const Graph& g)
    : graph_(&g), dist_(g.vertex_count(), 0.0), stamp_(g.vertex_count(), 0) {}

double ShortestPathWorkspace::endpoint_distance(VertexId u, VertexId v) {
    const Graph& g = *graph_;
    double edge_len = g.edge_length(u, v); // throws NotAdjacent / InvalidVertexId

    // stamp parity: epoch = relaxed this query, epoch+1 = settled.
    epoch_ += 2;
    std::uint64_t relaxed = epoch_;
    std::uint64_t settled = epoch_ + 1;
    heap_.clear();

    // Same heap semantics as sssp, so the settled prefix (and hence the
    // returned dist) is bit-identical to the full run.
    dist_[u] = 0.0;
    stamp_[u] = relaxed;
    heap_.push_back({0.0, u});
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
        auto [d, w] = heap_.back();
        heap_.pop_back();
        if (d > edge_len) break; // any shorter u-v path lies inside this radius
        if (stamp_[w] == settled) continue;
        stamp_[w] = settled;
        if (w == v) return d;
        for (const auto& nb : g.neighbors(w)) {
            if (stamp_[nb.to] == settled) continue;
            double candidate = d + nb.length;
            bool unseen = stamp_[nb.to] < relaxed;
            if (unseen || candidate < dist_[nb.to]) {
                dist_[nb.to] = candidate;
                stamp_[nb.to] = relaxed;
                heap_.push_back({candidate, nb.to});
                std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
            }
        }
    }
    // Frontier exceeded the edge length before settling v: the edge itself
    // is a shortest path.
    return edge_len;
}

double edge_endpoint_distance(const Graph& g, VertexId u, VertexId v) {
    ShortestPathWorkspace workspace(g);
    return workspace.endpoint_distance(u, v);
}

} // namespace geostretch

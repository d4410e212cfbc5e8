#include "geostretch/sampling.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

#include "geostretch/error.hpp"
#include "geostretch/shortest_path.hpp"

namespace geostretch {

namespace {

SourceSet run_fps(const Graph& g, std::size_t k, VertexId start, StartPolicy policy) {
    std::size_t n = g.vertex_count();
    if (k < 1 || k > n) {
        throw Error(Errc::KTooLarge,
                    "k = " + std::to_string(k) + " not in [1, " + std::to_string(n) + "]");
    }
    if (start >= n) {
        throw Error(Errc::InvalidVertexId, "start vertex " + std::to_string(start) +
                                               " out of range");
    }

    SourceSet result;
    result.start_policy = policy;
    result.sources.reserve(k);
    result.radii.reserve(k);

    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    VertexId next = start;
    for (std::size_t i = 0; i < k; ++i) {
        result.sources.push_back(next);
        DistanceRow row = sssp(g, next);
        for (std::size_t v = 0; v < n; ++v) {
            nearest[v] = std::min(nearest[v], row.dist[v]);
        }
        // Covering radius after this source; its argmax (smallest id on
        // ties) is the next source.
        double radius = 0.0;
        VertexId farthest = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (nearest[v] > radius) {
                radius = nearest[v];
                farthest = static_cast<VertexId>(v);
            }
        }
        result.radii.push_back(radius);
        next = farthest;
    }
    return result;
}

} // namespace

SourceSet farthest_point_sampling(const Graph& g, std::size_t k, VertexId start) {
    StartPolicy policy{StartPolicy::Kind::FixedStart, start, 0};
    return run_fps(g, k, start, policy);
}

SourceSet farthest_point_sampling_seeded(const Graph& g, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
    auto start = static_cast<VertexId>(pick(rng));
    StartPolicy policy{StartPolicy::Kind::SeededRandom, start, seed};
    return run_fps(g, k, start, policy);
}

double kcenter_radius(const Graph& g, std::span<const VertexId> sources) {
    if (sources.empty()) {
        throw Error(Errc::EmptySourceSet, "kcenter_radius needs at least one source");
    }
    std::size_t n = g.vertex_count();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<bool> settled(n, false);
    std::vector<std::pair<double, VertexId>> heap;
    for (VertexId s : sources) {
        if (s >= n) {
            throw Error(Errc::InvalidVertexId, "source " + std::to_string(s) + " out of range");
        }
        dist[s] = 0.0;
        heap.push_back({0.0, s});
    }
    std::make_heap(heap.begin(), heap.end(), std::greater<>{});
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
        auto [d, u] = heap.back();
        heap.pop_back();
        if (settled[u]) continue;
        settled[u] = true;
        for (const auto& nb : g.neighbors(u)) {
            double candidate = d + nb.length;
            if (candidate < dist[nb.to]) {
                dist[nb.to] = candidate;
                heap.push_back({candidate, nb.to});
                std::push_heap(heap.begin(), heap.end(), std::greater<>{});
            }
        }
    }
    double radius = 0.0;
    for (double d : dist) radius = std::max(radius, d);
    return radius;
}

} // namespace geostretch

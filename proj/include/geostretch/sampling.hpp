#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geostretch/graph.hpp"

namespace geostretch {

struct StartPolicy {
    enum class Kind { FixedStart, SeededRandom };
    Kind kind = Kind::FixedStart;
    VertexId start = 0;         // the resolved first source
    std::uint64_t seed = 0;     // meaningful for SeededRandom only
};

/// Ordered source selection with the covering-radius trace:
/// radii[i] = max_p min_{j<=i} d(p, s_j) after source i is added, so the
/// trace is non-increasing and source i+1 sits at distance radii[i] from
/// its nearest predecessor.
struct SourceSet {
    std::vector<VertexId> sources;
    std::vector<double> radii;
    StartPolicy start_policy;
};

/// Greedy farthest-point selection: each new source maximizes the distance
/// to the nearest already-chosen source, ties broken by smallest vertex
/// id. One SSSP per source. Throws KTooLarge or InvalidVertexId.
SourceSet farthest_point_sampling(const Graph& g, std::size_t k, VertexId start);

/// Same, with the first source drawn uniformly from a seeded RNG.
SourceSet farthest_point_sampling_seeded(const Graph& g, std::size_t k, std::uint64_t seed);

/// max over vertices of the distance to the nearest source, via one
/// multi-source sweep. Throws EmptySourceSet.
double kcenter_radius(const Graph& g, std::span<const VertexId> sources);

} // namespace geostretch

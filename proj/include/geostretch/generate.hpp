#pragma once

#include <cstdint>

#include "geostretch/mesh.hpp"

namespace geostretch {

/// Planar triangulated grid of rows x cols points with the given spacing:
/// each cell split into two triangles, so edge lengths are spacing and
/// spacing * sqrt(2).
Mesh grid_mesh(std::size_t rows, std::size_t cols, double spacing = 1.0);

/// Random connected graph: a random attachment tree plus extra_edges
/// uniform non-duplicate edges. unit_lengths picks all-1 lengths,
/// otherwise uniform in [0.5, 2]. Deterministic in the seed.
Graph random_connected_graph(std::size_t n, std::size_t extra_edges, bool unit_lengths,
                             std::uint64_t seed);

} // namespace geostretch

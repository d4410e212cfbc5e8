#include "geostretch/generate.hpp"

#include <random>
#include <set>

#include "geostretch/error.hpp"

namespace geostretch {

Mesh grid_mesh(std::size_t rows, std::size_t cols, double spacing) {
    if (rows < 2 || cols < 2) {
        throw Error(Errc::ParseError, "grid mesh needs at least 2x2 points");
    }
    std::vector<double> coords;
    coords.reserve(rows * cols * 3);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            coords.push_back(static_cast<double>(c) * spacing);
            coords.push_back(static_cast<double>(r) * spacing);
            coords.push_back(0.0);
        }
    }
    auto id = [cols](std::size_t r, std::size_t c) {
        return static_cast<VertexId>(r * cols + c);
    };
    std::vector<std::array<VertexId, 3>> faces;
    faces.reserve(2 * (rows - 1) * (cols - 1));
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            faces.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
            faces.push_back({id(r, c), id(r + 1, c + 1), id(r + 1, c)});
        }
    }
    return Mesh(3, std::move(coords), std::move(faces));
}

Graph random_connected_graph(std::size_t n, std::size_t extra_edges, bool unit_lengths,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> length_dist(0.5, 2.0);
    auto pick_length = [&] { return unit_lengths ? 1.0 : length_dist(rng); };

    std::vector<Edge> edges;
    std::set<std::pair<VertexId, VertexId>> used;
    // Random attachment tree keeps the graph connected.
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        auto u = static_cast<VertexId>(pick(rng));
        edges.push_back({u, static_cast<VertexId>(v), pick_length()});
        used.insert({u, static_cast<VertexId>(v)});
    }
    std::size_t max_extra = n * (n - 1) / 2 - (n - 1);
    extra_edges = std::min(extra_edges, max_extra);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (extra_edges > 0) {
        auto u = static_cast<VertexId>(pick(rng));
        auto v = static_cast<VertexId>(pick(rng));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        edges.push_back({u, v, pick_length()});
        --extra_edges;
    }
    return build_graph(n, std::move(edges));
}

} // namespace geostretch

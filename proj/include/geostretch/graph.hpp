#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "geostretch/common.hpp"

namespace geostretch {

struct Edge {
    VertexId u;
    VertexId v;
    double length;
};

/// Weighted undirected connected graph with positive finite edge lengths,
/// dense vertex ids 0..n-1, no self-loops and at most one edge per pair.
/// Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges normalized to u < v and sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }

    struct Neighbor {
        VertexId to;
        double length;
    };

    std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    bool has_edge(VertexId u, VertexId v) const;

    /// Length of the edge (u, v); throws NotAdjacent if absent.
    double edge_length(VertexId u, VertexId v) const;

    /// FNV-1a hash of (n, canonical edge list). Identifies the graph in
    /// serialized oracle files.
    std::uint64_t checksum() const { return checksum_; }

    friend Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Neighbor> adjacency_;
    std::uint64_t checksum_ = 0;
};

/// Validates and assembles a Graph. Throws InvalidVertexId, SelfLoop,
/// NonPositiveLength, DuplicateEdge, or DisconnectedGraph (whose message
/// lists the components).
Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges);

struct EdgeStats {
    double l_min;
    double l_max;
    double r_e; // l_max / l_min
};

/// Exact min/max edge length and their ratio. Throws EmptyEdgeSet on a
/// single-vertex graph.
EdgeStats edge_stats(const Graph& g);

/// Connected components as sorted vertex lists, sorted by smallest member.
std::vector<std::vector<VertexId>> connected_components(
    std::size_t vertex_count, const std::vector<Edge>& edges);

// Edge-list text format: first line "n m", then m lines "u v length".
// '#' starts a comment. Parallel input edges collapse to the shortest,
// reported as a warning.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

ParsedGraph read_edge_list(std::istream& in);
ParsedGraph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace geostretch

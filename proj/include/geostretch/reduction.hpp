#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "geostretch/graph.hpp"

namespace geostretch {

struct GridPoint {
    int x;
    int y;
    bool operator==(const GridPoint&) const = default;
};

/// A rectilinear grid drawing of a planar graph with maximum degree 3:
/// integer vertex coordinates and per-edge polylines of unit axis-aligned
/// segments, internally disjoint. Embeddings are input, never computed.
struct PlanarEmbedding {
    std::vector<GridPoint> vertex_coords; // index = vertex id
    struct EdgePolyline {
        VertexId u, v;
        std::vector<GridPoint> points; // endpoints included
    };
    std::vector<EdgePolyline> edges;
};

/// Throws DegreeTooHigh, MalformedPolyline, OverlappingPolylines,
/// or InvalidVertexId.
void validate_embedding(const PlanarEmbedding& embedding);

// Embedding text format: "v <id> <x> <y>" lines, then
// "e <u> <v> : <x1> <y1> <x2> <y2> ..." with the full polyline; '#' comments.
PlanarEmbedding read_embedding(std::istream& in);
PlanarEmbedding load_embedding(const std::string& path);

enum class NodeRole { Regular, Auxiliary };

/// Bookkeeping of the subdivision step: per input edge the auxiliary-node
/// count 2*k_e (always even), m = sum k_e, the role of every node of G_r,
/// and which input edge each G_r edge descends from. Coordinates are on
/// the half-integer grid, stored doubled to stay integral.
struct SubdivisionRecord {
    std::vector<std::uint32_t> k_e;             // per input edge
    std::uint64_t m = 0;                        // sum of k_e
    std::vector<NodeRole> node_roles;           // per G_r node
    std::vector<GridPoint> node_coords_x2;      // per G_r node, coords * 2
    std::vector<std::uint32_t> edge_origin;     // per G_r edge (canonical order) -> input edge
};

/// Subdivides each polyline: every interior integer grid point becomes an
/// auxiliary node; when that count is odd the first unit segment is split
/// once more at its half-integer midpoint. Resulting edge lengths are all
/// 1 except at most two halves per edge, and auxiliary counts are even.
std::pair<Graph, SubdivisionRecord> subdivide(const PlanarEmbedding& embedding);

/// Shape of one gadget: four slanted edges of length L around the a-b
/// edge of length w, with (|au|+|bu|)/|ab| = 2L/w = xi >= 3.
struct GadgetParams {
    double xi;
    double L;
    double w;
};

GadgetParams gadget_params(double xi, double edge_length);

/// The hardness instance: G_r with every edge replaced by a gadget.
struct ReductionInstance {
    Graph g_prime;
    std::vector<std::array<VertexId, 3>> faces; // {u,a,b} and {v,a,b} per gadget
    double xi;
    std::uint64_t m;
    std::uint64_t source_budget; // k + m
    struct GadgetTrace {
        VertexId u, v, a, b;        // node ids in g_prime (u, v inherited from G_r)
        std::uint32_t g_r_edge;     // index into the G_r canonical edge list
        std::uint32_t g_edge;       // index of the originating input edge
        double L, w;
    };
    std::vector<GadgetTrace> gadgets;
};

/// Replaces each G_r edge (u,v) of length l by nodes a, b and edges
/// ua = ub = va = vb = l/2, ab = l/xi, preserving d(u,v) = l. k is the
/// vertex-cover size under test; source_budget = k + m. Throws XiTooSmall.
ReductionInstance gadget_replace(const Graph& g_r, const SubdivisionRecord& record,
                                 double xi, std::size_t k = 0);

/// Ratio achieved by one pair class of the gadget case analysis, computed
/// numerically in an isolated one- or two-gadget graph.
struct GadgetCaseEntry {
    std::string pair_class;
    VertexId p, q;
    double ratio;
};

/// Single gadget with source u: (a,b) -> xi, (v,a) and (v,b) -> 3,
/// pairs touching u -> 1. Two adjacent unit gadgets with sources
/// {u1, v2}: max cross-gadget ratio 2, attained at (a1, a2).
std::vector<GadgetCaseEntry> gadget_case_table(const GadgetParams& params);

/// Per-k agreement between "G has a vertex cover of size <= k" and
/// "G_r has one of size <= k + m", both by brute force.
struct VcEquivalenceReport {
    std::uint32_t vc_min_g;
    std::uint32_t vc_min_gr;
    std::uint64_t m;
    struct Row {
        std::uint32_t k;
        bool vc_g;
        bool vc_gr;
        bool agree;
    };
    std::vector<Row> rows;
    bool all_agree;
};

VcEquivalenceReport vc_equivalence_check(const PlanarEmbedding& embedding,
                                         std::uint64_t budget = 1'000'000);

/// Per-k agreement between "G has a vertex cover of size <= k" and
/// "G' admits k + m sources of stretch <= xi", by exhaustive search.
struct SourceEquivalenceReport {
    double xi;
    std::uint64_t m;
    std::uint32_t vc_min_g;
    struct Row {
        std::uint32_t k;
        bool vc_leq_k;
        bool sources_exist;
        bool agree;
    };
    std::vector<Row> rows;
    bool all_agree;
};

SourceEquivalenceReport source_equivalence_check(const PlanarEmbedding& embedding, double xi,
                                                 std::uint64_t budget = 1'000'000);

} // namespace geostretch

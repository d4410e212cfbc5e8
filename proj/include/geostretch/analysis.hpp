#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geostretch/oracle.hpp"

namespace geostretch {

enum class StretchMethod { Fast, Naive };

struct StretchReport {
    double stretch;          // >= 1 for any sound oracle
    VertexId p, q;           // witness pair, smallest (p,q) among maximizers
    VertexId witness_source; // source attaining the witness pair's minimum
    StretchMethod method;
    std::uint64_t pairs_examined;
};

struct BoundCheck {
    std::string name;
    double lhs;
    double rhs;
    bool holds; // lhs <= rhs + 1e-9
    double slack; // rhs - lhs
};

BoundCheck make_bound_check(std::string name, double lhs, double rhs);

/// Max ratio over adjacent pairs only; by the adjacency property of the
/// maximum this equals the full maximum over all pairs. Denominators are
/// exact endpoint geodesics (an edge can be longer than the geodesic
/// between its endpoints). Throws GraphOracleMismatch if the oracle was
/// built for a different graph.
StretchReport stretch_fast(const Graph& g, const Oracle& oracle);

/// The definition computed literally over all ordered pairs p != q, with
/// full APSP; the verification oracle for stretch_fast. Throws
/// GraphTooLargeForNaive above the cap.
StretchReport stretch_naive(const Graph& g, const Oracle& oracle, std::size_t naive_cap = 2000);

/// Sandwich bounds on the stretch in terms of the covering radius
/// R = max_p d(p, s_p):  2R/l_max - 1 <= F <= 2R/l_min + 1.
struct SandwichChecks {
    BoundCheck lower;
    BoundCheck upper;
};
SandwichChecks check_radius_sandwich(const Graph& g, const Oracle& oracle);

/// Violations of d(u,s_u) + d(s_u,v) <= d(u,s_i,v) + 2 d(u,v), expected
/// empty (a proved inequality; any entry is an implementation bug).
struct RoutingViolation {
    VertexId u, v;
    double lhs, rhs;
};
std::vector<RoutingViolation> check_routing_inequality(const Graph& g, const Oracle& oracle,
                                                        std::size_t naive_cap = 2000);

/// F_FPS <= 2 r_e F_opt + 6 r_e + 1, with F_opt the stretch of an optimal
/// k-center source set. Builds both oracles internally.
BoundCheck check_fps_vs_kcenter_stretch(const Graph& g,
                                        const std::vector<VertexId>& fps_sources,
                                        const std::vector<VertexId>& kcenter_opt_sources);

/// F_FPS <= 2 r_e^2 F* + 2 r_e^2 + 8 r_e + 1, with F* the optimal stretch
/// for the same k (from exhaustive enumeration).
BoundCheck check_fps_vs_optimal_stretch(const Graph& g,
                                        const std::vector<VertexId>& fps_sources,
                                        double optimal_stretch);

} // namespace geostretch

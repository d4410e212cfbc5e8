#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "geostretch/graph.hpp"

namespace geostretch {

constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;

/// Ground-truth result of a subset enumeration. best_sets holds every
/// examined set attaining the objective, in lexicographic order (so the
/// first is the lexicographically smallest).
struct ExhaustiveResult {
    double objective;
    std::vector<std::vector<VertexId>> best_sets;
    std::uint64_t sets_examined;
};

/// C(n, k), saturating at 2^63-1 to keep budget comparisons safe.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Minimum stretch factor over all k-subsets of sources (F*), by full
/// enumeration against a shared APSP. Throws BudgetExceeded when
/// C(n,k) > budget, KTooLarge, or EmptySourceSet for k = 0.
ExhaustiveResult optimal_stretch_sources(const Graph& g, std::size_t k,
                                         std::uint64_t budget = kDefaultSubsetBudget);

/// Minimum covering radius max_p d(p, s_p) over all k-subsets.
ExhaustiveResult optimal_kcenter_sources(const Graph& g, std::size_t k,
                                         std::uint64_t budget = kDefaultSubsetBudget);

/// Smallest k <= max_k whose k-subsets include a vertex cover, with every
/// minimum cover listed. nullopt when no cover of size <= max_k exists.
/// Works on bare edge pairs; lengths and connectivity are irrelevant.
std::optional<ExhaustiveResult> minimum_vertex_cover(
    std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
    std::size_t max_k, std::uint64_t budget = kDefaultSubsetBudget);

struct ExistsResult {
    bool exists;
    std::optional<std::vector<VertexId>> witness; // lexicographically first
    std::uint64_t sets_examined;
};

/// Decision variant: does some k-subset achieve stretch <= xi (+1e-9)?
/// k = 0 answers false (no sources approximate nothing).
ExistsResult exists_sources_with_stretch(const Graph& g, std::size_t k, double xi,
                                         std::uint64_t budget = kDefaultSubsetBudget);

} // namespace geostretch

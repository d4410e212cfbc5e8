#include "geostretch/exhaustive.hpp"

#include <algorithm>
#include <limits>

#include "geostretch/error.hpp"
#include "geostretch/shortest_path.hpp"

namespace geostretch {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr std::uint64_t kCap = std::numeric_limits<std::int64_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is integral at each step
        std::uint64_t factor = n - k + i;
        if (result > kCap / factor) return kCap;
        result = result * factor / i;
    }
    return result;
}

namespace {

/// Shared all-pairs distances; one SSSP per vertex, reused by every subset.
struct Apsp {
    std::size_t n;
    std::vector<double> d; // n * n

    explicit Apsp(const Graph& g) : n(g.vertex_count()), d(n * n) {
        for (VertexId v = 0; v < n; ++v) {
            DistanceRow row = sssp(g, v);
            std::copy(row.dist.begin(), row.dist.end(), d.begin() + v * n);
        }
    }
    double at(VertexId a, VertexId b) const { return d[static_cast<std::size_t>(a) * n + b]; }
};

/// Stretch of a fixed source set, maximized over adjacent pairs only.
double subset_stretch(const Graph& g, const Apsp& apsp, std::span<const VertexId> sources) {
    double worst = 0.0;
    for (const Edge& e : g.edges()) {
        double best = std::numeric_limits<double>::infinity();
        for (VertexId s : sources) {
            double sum = apsp.at(s, e.u) + apsp.at(s, e.v);
            if (sum < best) best = sum;
        }
        double ratio = best / apsp.at(e.u, e.v);
        if (ratio > worst) worst = ratio;
    }
    return worst;
}

double subset_kcenter_radius(const Apsp& apsp, std::span<const VertexId> sources) {
    double radius = 0.0;
    for (VertexId v = 0; v < apsp.n; ++v) {
        double nearest = std::numeric_limits<double>::infinity();
        for (VertexId s : sources) {
            nearest = std::min(nearest, apsp.at(s, v));
        }
        radius = std::max(radius, nearest);
    }
    return radius;
}

/// Lexicographic k-subset enumeration over 0..n-1.
bool next_subset(std::vector<VertexId>& subset, std::size_t n) {
    std::size_t k = subset.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (subset[i] + (k - i) < n) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<VertexId> first_subset(std::size_t k) {
    std::vector<VertexId> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = static_cast<VertexId>(i);
    return subset;
}

void check_budget(std::size_t n, std::size_t k, std::uint64_t budget) {
    std::uint64_t count = binomial(n, k);
    if (count > budget) {
        throw Error(Errc::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                              ") = " + std::to_string(count) + " exceeds budget " +
                                              std::to_string(budget));
    }
}

void check_k(std::size_t n, std::size_t k) {
    if (k == 0) {
        throw Error(Errc::EmptySourceSet, "k = 0 has no optimum");
    }
    if (k > n) {
        throw Error(Errc::KTooLarge,
                    "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
}

template <typename Objective>
ExhaustiveResult minimize_over_subsets(std::size_t n, std::size_t k, Objective&& objective) {
    ExhaustiveResult result;
    result.objective = std::numeric_limits<double>::infinity();
    result.sets_examined = 0;
    std::vector<VertexId> subset = first_subset(k);
    do {
        ++result.sets_examined;
        double value = objective(subset);
        if (value < result.objective) {
            result.objective = value;
            result.best_sets.clear();
            result.best_sets.push_back(subset);
        } else if (value == result.objective) {
            result.best_sets.push_back(subset);
        }
    } while (next_subset(subset, n));
    return result;
}

} // namespace

ExhaustiveResult optimal_stretch_sources(const Graph& g, std::size_t k, std::uint64_t budget) {
    std::size_t n = g.vertex_count();
    check_k(n, k);
    check_budget(n, k, budget);
    Apsp apsp(g);
    return minimize_over_subsets(n, k, [&](std::span<const VertexId> subset) {
        return subset_stretch(g, apsp, subset);
    });
}

ExhaustiveResult optimal_kcenter_sources(const Graph& g, std::size_t k, std::uint64_t budget) {
    std::size_t n = g.vertex_count();
    check_k(n, k);
    check_budget(n, k, budget);
    Apsp apsp(g);
    return minimize_over_subsets(n, k, [&](std::span<const VertexId> subset) {
        return subset_kcenter_radius(apsp, subset);
    });
}

std::optional<ExhaustiveResult> minimum_vertex_cover(
    std::size_t vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges,
    std::size_t max_k, std::uint64_t budget) {
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw Error(Errc::InvalidVertexId, "edge endpoint out of range");
        }
    }
    max_k = std::min(max_k, vertex_count);
    std::uint64_t examined = 0;
    for (std::size_t k = 0; k <= max_k; ++k) {
        check_budget(vertex_count, k, budget);
        ExhaustiveResult result;
        result.objective = static_cast<double>(k);
        result.sets_examined = 0;
        std::vector<bool> in_set(vertex_count, false);
        std::vector<VertexId> subset = first_subset(k);
        do {
            ++examined;
            std::fill(in_set.begin(), in_set.end(), false);
            for (VertexId v : subset) in_set[v] = true;
            bool covers = true;
            for (auto [u, v] : edges) {
                if (!in_set[u] && !in_set[v]) {
                    covers = false;
                    break;
                }
            }
            if (covers) result.best_sets.push_back(subset);
        } while (k > 0 && next_subset(subset, vertex_count));
        if (!result.best_sets.empty()) {
            result.sets_examined = examined;
            return result;
        }
    }
    return std::nullopt;
}

ExistsResult exists_sources_with_stretch(const Graph& g, std::size_t k, double xi,
                                         std::uint64_t budget) {
    std::size_t n = g.vertex_count();
    if (k == 0) {
        return {false, std::nullopt, 0};
    }
    if (k > n) {
        throw Error(Errc::KTooLarge,
                    "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    check_budget(n, k, budget);
    Apsp apsp(g);
    ExistsResult result{false, std::nullopt, 0};
    std::vector<VertexId> subset = first_subset(k);
    do {
        ++result.sets_examined;
        if (subset_stretch(g, apsp, subset) <= xi + kBoundTolerance) {
            result.exists = true;
            result.witness = subset;
            return result;
        }
    } while (next_subset(subset, n));
    return result;
}

} // namespace geostretch

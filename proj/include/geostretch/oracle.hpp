#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geostretch/sampling.hpp"
#include "geostretch/shortest_path.hpp"

namespace geostretch {

struct ApproxDistance {
    double value;            // min_i d(p,s_i) + d(s_i,q)
    VertexId witness_source; // source attaining it, ties by smaller index
};

/// The any-pair structure: a flat k x n table of exact source distances,
/// queried in Theta(k) by scanning two rows. Immutable after build;
/// concurrent queries need no synchronization.
///
/// For p = q the literal formula value 2*d(p, s_p) is returned as-is; the
/// stretch factor is only defined for p != q and the analysis relies on
/// this identity.
class Oracle {
public:
    Oracle(std::vector<VertexId> sources, std::size_t n, std::vector<double> table,
           std::uint64_t graph_checksum)
        : sources_(std::move(sources)), n_(n), table_(std::move(table)),
          graph_checksum_(graph_checksum) {}

    std::size_t source_count() const { return sources_.size(); }
    std::size_t vertex_count() const { return n_; }
    const std::vector<VertexId>& sources() const { return sources_; }
    std::uint64_t graph_checksum() const { return graph_checksum_; }

    double at(std::size_t i, VertexId v) const { return table_[i * n_ + v]; }
    std::span<const double> row(std::size_t i) const { return {table_.data() + i * n_, n_}; }
    std::span<const double> table() const { return table_; }

    ApproxDistance approx_distance(VertexId p, VertexId q) const;

    /// (source id, distance) of the nearest source; ties by smaller index.
    std::pair<VertexId, double> nearest_source(VertexId p) const;
    std::size_t nearest_source_index(VertexId p) const;

private:
    std::vector<VertexId> sources_;
    std::size_t n_;
    std::vector<double> table_; // source-major
    std::uint64_t graph_checksum_;
};

/// One SSSP per source (parallel rows), O(kn) memory.
Oracle build_oracle(const Graph& g, const SourceSet& sources);
Oracle build_oracle(const Graph& g, const std::vector<VertexId>& sources);

// Little-endian binary format: magic "GSTR1", n and k as u64, k source
// ids (u64), k*n doubles row-major, then the graph checksum (u64).
// Round trips are bit-exact.
void save_oracle(const Oracle& oracle, const std::string& path);
Oracle load_oracle(const std::string& path);
/// Loads and verifies the stored checksum against g; throws
/// ChecksumMismatch when the oracle was built for a different graph.
Oracle load_oracle(const std::string& path, const Graph& g);

} // namespace geostretch

#pragma once

#include <cstddef>
#include <cstdint>

namespace geostretch {

using VertexId = std::uint32_t;

constexpr std::int32_t kNoParent = -1;

// Comparison tolerances used throughout: equalities between quantities that
// should agree up to floating-point noise are checked relatively; proved
// inequalities are checked with an absolute slack.
constexpr double kRelTolerance = 1e-12;
constexpr double kBoundTolerance = 1e-9;

inline bool approx_equal_rel(double a, double b, double rel_tol = kRelTolerance) {
    double scale = (a < 0 ? -a : a);
    double babs = (b < 0 ? -b : b);
    if (babs > scale) scale = babs;
    double diff = a - b;
    if (diff < 0) diff = -diff;
    return diff <= rel_tol * (scale > 1.0 ? scale : 1.0);
}

// FNV-1a, 64-bit. Used for the oracle file's graph checksum.
class Fnv1a64 {
public:
    void update(const void* data, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            hash_ ^= bytes[i];
            hash_ *= 1099511628211ULL;
        }
    }
    void update_u64(std::uint64_t v) {
        unsigned char buf[8];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
        update(buf, 8);
    }
    std::uint64_t digest() const { return hash_; }

private:
    std::uint64_t hash_ = 14695981039346656037ULL;
};

} // namespace geostretch

#include "geostretch/oracle.hpp"

#include <cstring>
#include <fstream>

#include "geostretch/error.hpp"

namespace geostretch {

ApproxDistance Oracle::approx_distance(VertexId p, VertexId q) const {
    if (p >= n_ || q >= n_) {
        throw Error(Errc::InvalidVertexId, "query vertex out of range");
    }
    std::size_t k = sources_.size();
    double best = table_[p] + table_[q];
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < k; ++i) {
        double sum = table_[i * n_ + p] + table_[i * n_ + q];
        if (sum < best) {
            best = sum;
            best_i = i;
        }
    }
    return {best, sources_[best_i]};
}

std::size_t Oracle::nearest_source_index(VertexId p) const {
    if (p >= n_) {
        throw Error(Errc::InvalidVertexId, "query vertex out of range");
    }
    std::size_t best_i = 0;
    double best = table_[p];
    for (std::size_t i = 1; i < sources_.size(); ++i) {
        double d = table_[i * n_ + p];
        if (d < best) {
            best = d;
            best_i = i;
        }
    }
    return best_i;
}

std::pair<VertexId, double> Oracle::nearest_source(VertexId p) const {
    std::size_t i = nearest_source_index(p);
    return {sources_[i], table_[i * n_ + p]};
}

Oracle build_oracle(const Graph& g, const SourceSet& sources) {
    return build_oracle(g, sources.sources);
}

Oracle build_oracle(const Graph& g, const std::vector<VertexId>& sources) {
    DistanceTable table = multi_sssp(g, sources);
    return Oracle(table.sources, table.n, std::move(table.values), g.checksum());
}

namespace {

constexpr char kMagic[5] = {'G', 'S', 'T', 'R', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (in.gcount() != 8) {
        throw Error(Errc::CorruptFile, "unexpected end of oracle file");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& in) {
    std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace

void save_oracle(const Oracle& oracle, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::IoError, "cannot write '" + path + "'");
    }
    out.write(kMagic, sizeof(kMagic));
    put_u64(out, oracle.vertex_count());
    put_u64(out, oracle.source_count());
    for (VertexId s : oracle.sources()) put_u64(out, s);
    for (double v : oracle.table()) put_f64(out, v);
    put_u64(out, oracle.graph_checksum());
    if (!out) {
        throw Error(Errc::IoError, "write failed for '" + path + "'");
    }
}

Oracle load_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::IoError, "cannot open '" + path + "'");
    }
    char magic[5];
    in.read(magic, sizeof(magic));
    if (in.gcount() != sizeof(magic)) {
        throw Error(Errc::CorruptFile, "file shorter than the magic header");
    }
    if (std::memcmp(magic, kMagic, 4) == 0 && magic[4] != kMagic[4]) {
        throw Error(Errc::VersionMismatch,
                    std::string("unsupported oracle format version '") + magic[4] + "'");
    }
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw Error(Errc::CorruptFile, "not an oracle file");
    }
    std::uint64_t n = get_u64(in);
    std::uint64_t k = get_u64(in);
    if (k == 0 || n == 0 || k > n) {
        throw Error(Errc::CorruptFile, "implausible table dimensions");
    }
    std::vector<VertexId> sources(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t s = get_u64(in);
        if (s >= n) {
            throw Error(Errc::CorruptFile, "source id out of range");
        }
        sources[i] = static_cast<VertexId>(s);
    }
    std::vector<double> table(k * n);
    for (auto& v : table) v = get_f64(in);
    std::uint64_t checksum = get_u64(in);
    // Trailing bytes mean the file is not what the header promised.
    if (in.peek() != std::char_traits<char>::eof()) {
        throw Error(Errc::CorruptFile, "trailing bytes after checksum");
    }
    return Oracle(std::move(sources), n, std::move(table), checksum);
}

Oracle load_oracle(const std::string& path, const Graph& g) {
    Oracle oracle = load_oracle(path);
    if (oracle.graph_checksum() != g.checksum() || oracle.vertex_count() != g.vertex_count()) {
        throw Error(Errc::ChecksumMismatch, "oracle was built for a different graph");
    }
    return oracle;
}

} // namespace geostretch

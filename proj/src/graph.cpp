#include "geostretch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include "geostretch/error.hpp"

namespace geostretch {

namespace {

std::uint64_t double_bits(double value) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(value));
    std::memcpy(&bits, &value, sizeof(bits));
    return bits;
}

std::uint64_t graph_checksum(std::size_t n, const std::vector<Edge>& canonical_edges) {
    Fnv1a64 hash;
    hash.update_u64(n);
    for (const Edge& e : canonical_edges) {
        hash.update_u64(e.u);
        hash.update_u64(e.v);
        hash.update_u64(double_bits(e.length));
    }
    return hash.digest();
}

std::string format_components(const std::vector<std::vector<VertexId>>& components) {
    std::ostringstream out;
    out << components.size() << " components:";
    std::size_t shown = 0;
    for (const auto& comp : components) {
        if (shown == 8) {
            out << " ...";
            break;
        }
        out << " [";
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (i == 8) {
                out << ",...";
                break;
            }
            if (i > 0) out << ",";
            out << comp[i];
        }
        out << "]";
        ++shown;
    }
    return out.str();
}

} // namespace

std::vector<std::vector<VertexId>> connected_components(std::size_t vertex_count,
                                                        const std::vector<Edge>& edges) {
    std::vector<std::vector<VertexId>> adj(vertex_count);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> seen(vertex_count, false);
    std::vector<std::vector<VertexId>> components;
    std::vector<VertexId> stack;
    for (std::size_t start = 0; start < vertex_count; ++start) {
        if (seen[start]) continue;
        std::vector<VertexId> comp;
        stack.push_back(static_cast<VertexId>(start));
        seen[start] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 1) {
        throw Error(Errc::InvalidVertexId, "vertex_count must be at least 1");
    }
    for (Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw Error(Errc::InvalidVertexId,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") references a vertex outside [0," +
                            std::to_string(vertex_count) + ")");
        }
        if (e.u == e.v) {
            throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
        }
        if (!(e.length > 0.0) || !std::isfinite(e.length)) {
            throw Error(Errc::NonPositiveLength,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has length " + std::to_string(e.length));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
            throw Error(Errc::DuplicateEdge,
                        "edge (" + std::to_string(edges[i].u) + "," +
                            std::to_string(edges[i].v) + ") appears more than once");
        }
    }

    auto components = connected_components(vertex_count, edges);
    if (components.size() != 1) {
        throw Error(Errc::DisconnectedGraph, format_components(components));
    }

    Graph g;
    g.n_ = vertex_count;
    g.edges_ = std::move(edges);
    g.offsets_.assign(vertex_count + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<std::uint32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.adjacency_[cursor[e.u]++] = {e.v, e.length};
        g.adjacency_[cursor[e.v]++] = {e.u, e.length};
    }
    // Neighbor lists sorted by id for deterministic relaxation order.
    for (std::size_t v = 0; v < vertex_count; ++v) {
        std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1],
                  [](const Graph::Neighbor& a, const Graph::Neighbor& b) { return a.to < b.to; });
    }
    g.checksum_ = graph_checksum(vertex_count, g.edges_);
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto span = neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& nb, VertexId id) { return nb.to < id; });
    return it != span.end() && it->to == v;
}

double Graph::edge_length(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) {
        throw Error(Errc::InvalidVertexId, "vertex id out of range");
    }
    auto span = neighbors(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Neighbor& nb, VertexId id) { return nb.to < id; });
    if (it == span.end() || it->to != v) {
        throw Error(Errc::NotAdjacent,
                    "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return it->length;
}

EdgeStats edge_stats(const Graph& g) {
    if (g.edge_count() == 0) {
        throw Error(Errc::EmptyEdgeSet, "graph has no edges");
    }
    double l_min = g.edges().front().length;
    double l_max = l_min;
    for (const Edge& e : g.edges()) {
        l_min = std::min(l_min, e.length);
        l_max = std::max(l_max, e.length);
    }
    return {l_min, l_max, l_max / l_min};
}

namespace {

// Strips '#' comments and returns whether any tokens remain.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

} // namespace

ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) {
        throw Error(Errc::ParseError, "missing header line 'n m'");
    }
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    if (!(header >> n >> m)) {
        throw Error(Errc::ParseError, "bad header line, expected 'n m'");
    }

    std::vector<std::string> warnings;
    std::map<std::pair<VertexId, VertexId>, double> collapsed;
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_content_line(in, line)) {
            throw Error(Errc::ParseError,
                        "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        }
        std::istringstream row(line);
        long long u, v;
        double length;
        if (!(row >> u >> v >> length)) {
            throw Error(Errc::ParseError, "bad edge line: '" + line + "'");
        }
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n) {
            throw Error(Errc::InvalidVertexId, "edge endpoint out of range: '" + line + "'");
        }
        auto a = static_cast<VertexId>(u), b = static_cast<VertexId>(v);
        if (a > b) std::swap(a, b);
        auto [it, inserted] = collapsed.try_emplace({a, b}, length);
        if (!inserted) {
            // Parallel edges collapse to the shortest; only the minimum can
            // matter for shortest paths.
            warnings.push_back("parallel edge (" + std::to_string(a) + "," + std::to_string(b) +
                               ") collapsed to min length");
            it->second = std::min(it->second, length);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(collapsed.size());
    for (const auto& [key, length] : collapsed) {
        edges.push_back({key.first, key.second, length});
    }
    return {build_graph(n, std::move(edges)), std::move(warnings)};
}

ParsedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::IoError, "cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    out.precision(17);
    for (const Edge& e : g.edges()) {
        out << e.u << " " << e.v << " " << e.length << "\n";
    }
}

} // namespace geostretch

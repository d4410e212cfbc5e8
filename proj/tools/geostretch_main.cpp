// geostretch: landmark-based approximate geodesic distances on weighted
// graphs and triangle meshes. Every run prints one JSON object with the
// resolved config and the result; timings are included for bench or on
// request, so default outputs are reproducible byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geostretch/analysis.hpp"
#include "geostretch/error.hpp"
#include "geostretch/exhaustive.hpp"
#include "geostretch/generate.hpp"
#include "geostretch/mesh.hpp"
#include "geostretch/oracle.hpp"
#include "geostretch/parallel.hpp"
#include "geostretch/reduction.hpp"
#include "geostretch/sampling.hpp"

using nlohmann::json;
using namespace geostretch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    std::size_t mid = samples.size() / 2;
    if (samples.size() % 2 == 1) return samples[mid];
    return 0.5 * (samples[mid - 1] + samples[mid]);
}

json bound_to_json(const BoundCheck& check) {
    return {{"name", check.name},
            {"lhs", check.lhs},
            {"rhs", check.rhs},
            {"holds", check.holds},
            {"slack", check.slack}};
}

json stretch_to_json(const StretchReport& report) {
    return {{"stretch", report.stretch},
            {"witness_pair", {report.p, report.q}},
            {"witness_source", report.witness_source},
            {"method", report.method == StretchMethod::Fast ? "fast" : "naive"},
            {"pairs_examined", report.pairs_examined}};
}

json source_set_to_json(const SourceSet& set) {
    json policy;
    if (set.start_policy.kind == StartPolicy::Kind::FixedStart) {
        policy = {{"kind", "fixed"}, {"start", set.start_policy.start}};
    } else {
        policy = {{"kind", "seeded_random"},
                  {"start", set.start_policy.start},
                  {"seed", set.start_policy.seed}};
    }
    return {{"sources", set.sources}, {"radii", set.radii}, {"start_policy", policy}};
}

struct CommonOptions {
    std::size_t threads = 0;
    bool timings = false;
};

struct Emitter {
    json config;
    json result;
    json timings;
    bool want_timings = false;

    void print() const {
        json out;
        out["config"] = config;
        out["result"] = result;
        if (want_timings) out["timings"] = timings;
        std::cout << out.dump(2) << "\n";
    }
};

bool has_off_extension(const std::string& path) {
    return path.size() >= 4 && path.substr(path.size() - 4) == ".off";
}

/// Graph-taking subcommands also accept OFF meshes (edges and Euclidean
/// lengths come from the triangulation).
Graph load_graph_any(const std::string& path) {
    if (has_off_extension(path)) return mesh_to_graph(load_off(path));
    return load_edge_list(path).graph;
}

SourceSet select_sources(const Graph& g, std::size_t k, VertexId start, bool seeded,
                         std::uint64_t seed) {
    if (seeded) return farthest_point_sampling_seeded(g, k, seed);
    return farthest_point_sampling(g, k, start);
}

// ----- validate ------------------------------------------------------------

int run_validate(const std::string& path, std::string format, Emitter& out) {
    if (format == "auto") {
        format = has_off_extension(path) ? "mesh" : "graph";
    }
    out.config["format"] = format;
    bool valid = true;
    if (format == "graph") {
        out.result["type"] = "graph";
        try {
            ParsedGraph parsed = load_edge_list(path);
            out.result["n"] = parsed.graph.vertex_count();
            out.result["edges"] = parsed.graph.edge_count();
            out.result["warnings"] = parsed.warnings;
            if (parsed.graph.edge_count() > 0) {
                EdgeStats stats = edge_stats(parsed.graph);
                out.result["edge_stats"] = {
                    {"l_min", stats.l_min}, {"l_max", stats.l_max}, {"r_e", stats.r_e}};
            }
        } catch (const Error& e) {
            if (e.code() == Errc::IoError) throw;
            valid = false;
            out.result["error"] = e.what();
        }
    } else {
        out.result["type"] = "mesh";
        try {
            Mesh mesh = load_off(path);
            ValidationReport report = validate_triangle_mesh(mesh);
            json checks = json::array();
            for (const auto& check : report.checks) {
                checks.push_back({{"name", check.name},
                                  {"passed", check.passed},
                                  {"informational", check.informational},
                                  {"detail", check.detail}});
            }
            out.result["checks"] = checks;
            valid = report.passed();
            if (valid) {
                Graph g = mesh_to_graph(mesh);
                out.result["graph"] = {{"n", g.vertex_count()}, {"edges", g.edge_count()}};
            }
        } catch (const Error& e) {
            if (e.code() == Errc::IoError) throw;
            valid = false;
            out.result["error"] = e.what();
        }
    }
    out.result["valid"] = valid;
    return valid ? kExitOk : kExitCheckFailed;
}

// ----- sample ---------------------------------------------------------------

int run_sample(const std::string& path, std::size_t k, VertexId start, bool seeded,
               std::uint64_t seed, bool csv, Emitter& out) {
    Graph g = load_graph_any(path);
    auto t0 = std::chrono::steady_clock::now();
    SourceSet set = select_sources(g, k, start, seeded, seed);
    out.timings["sample_seconds"] = seconds_since(t0);
    out.result = source_set_to_json(set);
    if (csv) {
        std::cout << "index,source,radius\n";
        for (std::size_t i = 0; i < set.sources.size(); ++i) {
            std::cout << i << "," << set.sources[i] << "," << set.radii[i] << "\n";
        }
        return kExitOk;
    }
    return kExitOk;
}

// ----- oracle ---------------------------------------------------------------

int run_oracle_build(const std::string& graph_path, std::size_t k, const std::string& out_path,
                     VertexId start, bool seeded, std::uint64_t seed, Emitter& out) {
    Graph g = load_graph_any(graph_path);
    auto t0 = std::chrono::steady_clock::now();
    SourceSet set = select_sources(g, k, start, seeded, seed);
    Oracle oracle = build_oracle(g, set);
    out.timings["build_seconds"] = seconds_since(t0);
    save_oracle(oracle, out_path);
    out.result = {{"oracle_file", out_path},
                  {"n", oracle.vertex_count()},
                  {"k", oracle.source_count()},
                  {"sources", oracle.sources()}};
    return kExitOk;
}

int run_oracle_query(const std::string& oracle_path, VertexId p, VertexId q, Emitter& out) {
    Oracle oracle = load_oracle(oracle_path);
    ApproxDistance approx = oracle.approx_distance(p, q);
    auto [nearest_p, dist_p] = oracle.nearest_source(p);
    out.result = {{"p", p},
                  {"q", q},
                  {"value", approx.value},
                  {"witness_source", approx.witness_source},
                  {"nearest_source_of_p", {{"source", nearest_p}, {"distance", dist_p}}}};
    return kExitOk;
}

// ----- stretch ---------------------------------------------------------------

int run_stretch(const std::string& graph_path, const std::string& oracle_path,
                const std::string& method, bool check_bounds, std::size_t naive_cap,
                Emitter& out) {
    Graph g = load_graph_any(graph_path);
    Oracle oracle = load_oracle(oracle_path, g);
    int exit_code = kExitOk;

    StretchReport primary{};
    if (method == "fast" || method == "both") {
        auto t0 = std::chrono::steady_clock::now();
        StretchReport fast = stretch_fast(g, oracle);
        out.timings["fast_seconds"] = seconds_since(t0);
        out.result["fast"] = stretch_to_json(fast);
        primary = fast;
    }
    if (method == "naive" || method == "both") {
        auto t0 = std::chrono::steady_clock::now();
        StretchReport naive = stretch_naive(g, oracle, naive_cap);
        out.timings["naive_seconds"] = seconds_since(t0);
        out.result["naive"] = stretch_to_json(naive);
        if (method == "naive") primary = naive;
    }
    if (method == "both") {
        double fast_value = out.result["fast"]["stretch"].get<double>();
        double naive_value = out.result["naive"]["stretch"].get<double>();
        bool agree = approx_equal_rel(fast_value, naive_value);
        out.result["methods_agree"] = agree;
        if (!agree) exit_code = kExitCheckFailed;
    }
    out.result["stretch"] = primary.stretch;
    out.result["witness_pair"] = {primary.p, primary.q};
    out.result["witness_source"] = primary.witness_source;
    out.result["method"] = method;

    if (check_bounds) {
        json bounds = json::array();
        SandwichChecks sandwich = check_radius_sandwich(g, oracle);
        bounds.push_back(bound_to_json(sandwich.lower));
        bounds.push_back(bound_to_json(sandwich.upper));
        if (!sandwich.lower.holds || !sandwich.upper.holds) exit_code = kExitCheckFailed;
        if (g.vertex_count() <= naive_cap) {
            auto violations = check_routing_inequality(g, oracle, naive_cap);
            json entry = {{"name", "routing_inequality"},
                          {"holds", violations.empty()},
                          {"violations", violations.size()}};
            if (!violations.empty()) {
                entry["first_violation"] = {{"u", violations[0].u},
                                            {"v", violations[0].v},
                                            {"lhs", violations[0].lhs},
                                            {"rhs", violations[0].rhs}};
                exit_code = kExitCheckFailed;
            }
            bounds.push_back(entry);
        }
        out.result["bounds"] = bounds;
    }
    return exit_code;
}

// ----- brute -----------------------------------------------------------------

json exhaustive_to_json(const ExhaustiveResult& result) {
    return {{"objective", result.objective},
            {"best_sets", result.best_sets},
            {"sets_examined", result.sets_examined}};
}

int run_brute(const std::string& graph_path, const std::string& objective, std::size_t k,
              double xi, std::uint64_t budget, Emitter& out) {
    Graph g = load_graph_any(graph_path);
    auto t0 = std::chrono::steady_clock::now();
    if (objective == "stretch") {
        out.result = exhaustive_to_json(optimal_stretch_sources(g, k, budget));
    } else if (objective == "kcenter") {
        out.result = exhaustive_to_json(optimal_kcenter_sources(g, k, budget));
    } else if (objective == "vc") {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v});
        auto cover = minimum_vertex_cover(g.vertex_count(), pairs, k, budget);
        if (cover) {
            out.result = exhaustive_to_json(*cover);
            out.result["found"] = true;
        } else {
            out.result = {{"found", false}, {"max_k", k}};
        }
    } else { // exists
        ExistsResult exists = exists_sources_with_stretch(g, k, xi, budget);
        out.result = {{"exists", exists.exists}, {"sets_examined", exists.sets_examined}};
        if (exists.witness) out.result["witness"] = *exists.witness;
    }
    out.timings["search_seconds"] = seconds_since(t0);
    return kExitOk;
}

// ----- gadget ----------------------------------------------------------------

int run_gadget_build(const std::string& embedding_path, std::size_t k, double xi,
                     const std::string& out_path, std::string sidecar_path, Emitter& out) {
    PlanarEmbedding embedding = load_embedding(embedding_path);
    auto [g_r, record] = subdivide(embedding);
    ReductionInstance instance = gadget_replace(g_r, record, xi, k);

    std::ofstream graph_out(out_path);
    if (!graph_out) throw Error(Errc::IoError, "cannot write '" + out_path + "'");
    write_edge_list(instance.g_prime, graph_out);

    if (sidecar_path.empty()) sidecar_path = out_path + ".trace.json";
    json trace;
    trace["xi"] = instance.xi;
    trace["m"] = instance.m;
    trace["source_budget"] = instance.source_budget;
    trace["k_e"] = record.k_e;
    json gadgets = json::array();
    for (const auto& gadget : instance.gadgets) {
        gadgets.push_back({{"u", gadget.u},
                           {"v", gadget.v},
                           {"a", gadget.a},
                           {"b", gadget.b},
                           {"g_r_edge", gadget.g_r_edge},
                           {"g_edge", gadget.g_edge},
                           {"L", gadget.L},
                           {"w", gadget.w}});
    }
    trace["gadgets"] = gadgets;
    json faces = json::array();
    for (const auto& face : instance.faces) faces.push_back({face[0], face[1], face[2]});
    trace["faces"] = faces;
    std::ofstream sidecar(sidecar_path);
    if (!sidecar) throw Error(Errc::IoError, "cannot write '" + sidecar_path + "'");
    sidecar << trace.dump(2) << "\n";

    out.result = {{"g_prime", {{"n", instance.g_prime.vertex_count()},
                               {"edges", instance.g_prime.edge_count()}}},
                  {"m", instance.m},
                  {"xi", instance.xi},
                  {"source_budget", instance.source_budget},
                  {"output", out_path},
                  {"sidecar", sidecar_path}};
    return kExitOk;
}

int run_gadget_verify(const std::string& embedding_path, double xi, std::uint64_t budget,
                      bool csv, Emitter& out) {
    PlanarEmbedding embedding = load_embedding(embedding_path);
    auto t0 = std::chrono::steady_clock::now();
    VcEquivalenceReport vc = vc_equivalence_check(embedding, budget);
    SourceEquivalenceReport t2 = source_equivalence_check(embedding, xi, budget);
    out.timings["verify_seconds"] = seconds_since(t0);

    json vc_rows = json::array();
    for (const auto& row : vc.rows) {
        vc_rows.push_back({{"k", row.k}, {"vc_g", row.vc_g}, {"vc_gr", row.vc_gr},
                           {"agree", row.agree}});
    }
    json t2_rows = json::array();
    for (const auto& row : t2.rows) {
        t2_rows.push_back({{"k", row.k},
                           {"vc_leq_k", row.vc_leq_k},
                           {"sources_exist", row.sources_exist},
                           {"agree", row.agree}});
    }
    out.result = {{"vc_equivalence",
                   {{"vc_min_g", vc.vc_min_g},
                    {"vc_min_gr", vc.vc_min_gr},
                    {"m", vc.m},
                    {"rows", vc_rows},
                    {"all_agree", vc.all_agree}}},
                  {"source_equivalence",
                   {{"xi", t2.xi},
                    {"m", t2.m},
                    {"vc_min_g", t2.vc_min_g},
                    {"rows", t2_rows},
                    {"all_agree", t2.all_agree}}},
                  {"all_agree", vc.all_agree && t2.all_agree}};
    if (csv) {
        std::cout << "check,k,lhs,rhs,agree\n";
        for (const auto& row : vc.rows) {
            std::cout << "vc," << row.k << "," << row.vc_g << "," << row.vc_gr << ","
                      << row.agree << "\n";
        }
        for (const auto& row : t2.rows) {
            std::cout << "sources," << row.k << "," << row.vc_leq_k << ","
                      << row.sources_exist << "," << row.agree << "\n";
        }
    }
    return vc.all_agree && t2.all_agree ? kExitOk : kExitCheckFailed;
}

// ----- bench -----------------------------------------------------------------

struct LinearFit {
    double slope;
    double intercept;
    double r2;
};

LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    double mean = sy / n;
    double ss_tot = 0, ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = slope * xs[i] + intercept;
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
        ss_res += (ys[i] - fit) * (ys[i] - fit);
    }
    return {slope, intercept, ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0};
}

int run_bench(const std::string& graph_path, std::size_t k, std::size_t queries,
              std::size_t repeats, std::size_t naive_cap, Emitter& out) {
    Graph g = load_graph_any(graph_path);
    std::size_t n = g.vertex_count();
    k = std::min(k, n);

    auto t0 = std::chrono::steady_clock::now();
    SourceSet set = farthest_point_sampling(g, k, 0);
    Oracle oracle = build_oracle(g, set);
    double build_seconds = seconds_since(t0);

    // Query scaling over prefixes of the FPS order (a k'-prefix is itself
    // an FPS source set).
    std::vector<std::size_t> ks;
    for (std::size_t divisor : {8, 4, 2, 1}) {
        std::size_t prefix = std::max<std::size_t>(1, k / divisor);
        if (ks.empty() || ks.back() != prefix) ks.push_back(prefix);
    }
    std::mt19937_64 rng(12345);
    std::vector<std::pair<VertexId, VertexId>> pairs(queries);
    for (auto& pair : pairs) {
        pair = {static_cast<VertexId>(rng() % n), static_cast<VertexId>(rng() % n)};
    }
    json query_rows = json::array();
    std::vector<double> xs, ys;
    for (std::size_t prefix : ks) {
        std::vector<VertexId> prefix_sources(set.sources.begin(),
                                             set.sources.begin() + prefix);
        Oracle prefix_oracle(prefix_sources, n,
                             std::vector<double>(oracle.table().begin(),
                                                 oracle.table().begin() + prefix * n),
                             g.checksum());
        std::vector<double> samples;
        double guard = 0.0;
        for (std::size_t rep = 0; rep < std::max<std::size_t>(repeats, 5); ++rep) {
            auto start = std::chrono::steady_clock::now();
            for (const auto& [p, q] : pairs) {
                guard += prefix_oracle.approx_distance(p, q).value;
            }
            samples.push_back(seconds_since(start) / static_cast<double>(pairs.size()));
        }
        double per_query = median(samples);
        query_rows.push_back({{"k", prefix},
                              {"median_query_seconds", per_query},
                              {"checksum", guard}});
        xs.push_back(static_cast<double>(prefix));
        ys.push_back(per_query);
    }
    LinearFit fit = fit_line(xs, ys);

    json stretch_timing;
    {
        auto start = std::chrono::steady_clock::now();
        StretchReport fast = stretch_fast(g, oracle);
        stretch_timing["fast_seconds"] = seconds_since(start);
        stretch_timing["stretch"] = fast.stretch;
        if (n <= naive_cap) {
            start = std::chrono::steady_clock::now();
            StretchReport naive = stretch_naive(g, oracle, naive_cap);
            stretch_timing["naive_seconds"] = seconds_since(start);
            stretch_timing["naive_agrees"] = approx_equal_rel(fast.stretch, naive.stretch);
        } else {
            stretch_timing["naive_skipped"] = "n exceeds naive cap";
        }
    }

    out.result = {{"build", {{"k", k}, {"seconds", build_seconds}}},
                  {"query",
                   {{"rows", query_rows},
                    {"fit", {{"slope", fit.slope}, {"intercept", fit.intercept},
                             {"r2", fit.r2}}}}},
                  {"stretch_timing", stretch_timing}};
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landmark-based approximate geodesic distances on weighted graphs "
                 "and triangle meshes"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--threads", common.threads,
                   "Worker thread cap (0 = auto; GEOSTRETCH_THREADS also applies)");
    app.add_flag("--timings", common.timings, "Include a timings section in the output");

    // validate
    std::string validate_path, validate_format = "auto";
    auto* validate_cmd = app.add_subcommand("validate", "Validate a graph or mesh file");
    validate_cmd->add_option("file", validate_path)->required();
    validate_cmd->add_option("--format", validate_format)
        ->check(CLI::IsMember({"auto", "graph", "mesh"}));

    // sample
    std::string sample_path;
    std::size_t sample_k = 1;
    VertexId sample_start = 0;
    std::uint64_t sample_seed = 0;
    bool sample_csv = false;
    auto* sample_cmd = app.add_subcommand("sample", "Farthest point sampling with radius trace");
    sample_cmd->add_option("graph", sample_path)->required();
    sample_cmd->add_option("-k", sample_k)->required();
    auto* sample_start_opt = sample_cmd->add_option("--start", sample_start);
    auto* sample_seed_opt = sample_cmd->add_option("--seed", sample_seed);
    sample_start_opt->excludes(sample_seed_opt);
    sample_cmd->add_flag("--csv", sample_csv, "Also print the trace as CSV");

    // oracle build / query
    auto* oracle_cmd = app.add_subcommand("oracle", "Build or query a distance oracle");
    oracle_cmd->require_subcommand(1);
    std::string ob_graph, ob_out;
    std::size_t ob_k = 1;
    VertexId ob_start = 0;
    std::uint64_t ob_seed = 0;
    auto* ob_cmd = oracle_cmd->add_subcommand("build", "Select sources and precompute the table");
    ob_cmd->add_option("graph", ob_graph)->required();
    ob_cmd->add_option("-k", ob_k)->required();
    ob_cmd->add_option("-o,--output", ob_out)->required();
    auto* ob_start_opt = ob_cmd->add_option("--start", ob_start);
    auto* ob_seed_opt = ob_cmd->add_option("--seed", ob_seed);
    ob_start_opt->excludes(ob_seed_opt);

    std::string oq_file;
    VertexId oq_p = 0, oq_q = 0;
    auto* oq_cmd = oracle_cmd->add_subcommand("query", "Approximate distance between two vertices");
    oq_cmd->add_option("oracle", oq_file)->required();
    oq_cmd->add_option("-p", oq_p)->required();
    oq_cmd->add_option("-q", oq_q)->required();

    // stretch
    std::string stretch_graph, stretch_oracle, stretch_method = "fast";
    bool stretch_bounds = false;
    std::size_t naive_cap = 2000;
    auto* stretch_cmd = app.add_subcommand("stretch", "Stretch factor of an oracle");
    stretch_cmd->add_option("graph", stretch_graph)->required();
    stretch_cmd->add_option("oracle", stretch_oracle)->required();
    stretch_cmd->add_option("--method", stretch_method)
        ->check(CLI::IsMember({"fast", "naive", "both"}));
    stretch_cmd->add_flag("--check-bounds", stretch_bounds,
                          "Evaluate the covering-radius sandwich and per-pair inequality");
    stretch_cmd->add_option("--naive-cap", naive_cap);

    // brute
    std::string brute_graph, brute_objective;
    std::size_t brute_k = 1;
    double brute_xi = 3.0;
    std::uint64_t brute_budget = kDefaultSubsetBudget;
    auto* brute_cmd = app.add_subcommand("brute", "Exhaustive ground-truth searches");
    brute_cmd->add_option("graph", brute_graph)->required();
    brute_cmd->add_option("--objective", brute_objective)
        ->required()
        ->check(CLI::IsMember({"stretch", "kcenter", "vc", "exists"}));
    brute_cmd->add_option("-k", brute_k)->required();
    brute_cmd->add_option("--xi", brute_xi);
    brute_cmd->add_option("--budget", brute_budget);

    // gadget build / verify
    auto* gadget_cmd = app.add_subcommand("gadget", "Hardness-instance construction and checks");
    gadget_cmd->require_subcommand(1);
    std::string gb_embedding, gb_out, gb_sidecar;
    std::size_t gb_k = 0;
    double gb_xi = 3.0;
    auto* gb_cmd = gadget_cmd->add_subcommand("build", "Emit G' with a traceability sidecar");
    gb_cmd->add_option("embedding", gb_embedding)->required();
    gb_cmd->add_option("-k", gb_k);
    gb_cmd->add_option("--xi", gb_xi);
    gb_cmd->add_option("-o,--output", gb_out)->required();
    gb_cmd->add_option("--sidecar", gb_sidecar);

    std::string gv_embedding;
    std::size_t gv_k = 0;
    double gv_xi = 3.0;
    std::uint64_t gv_budget = kDefaultSubsetBudget;
    bool gv_csv = false;
    auto* gv_cmd = gadget_cmd->add_subcommand("verify", "Per-k equivalence agreement tables");
    gv_cmd->add_option("embedding", gv_embedding)->required();
    auto* gv_k_opt =
        gv_cmd->add_option("-k", gv_k, "Cover size of interest (the table covers every k)");
    gv_cmd->add_option("--xi", gv_xi);
    gv_cmd->add_option("--budget", gv_budget);
    gv_cmd->add_flag("--csv", gv_csv, "Also print the agreement rows as CSV");

    // bench
    std::string bench_graph;
    std::size_t bench_k = 50, bench_queries = 100000, bench_repeats = 5,
                bench_naive_cap = 2000;
    auto* bench_cmd = app.add_subcommand("bench", "Build/query/stretch timing harness");
    bench_cmd->add_option("graph", bench_graph)->required();
    bench_cmd->add_option("-k", bench_k)->required();
    bench_cmd->add_option("--queries", bench_queries);
    bench_cmd->add_option("--repeats", bench_repeats);
    bench_cmd->add_option("--naive-cap", bench_naive_cap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    set_thread_count(common.threads);

    Emitter out;
    out.want_timings = common.timings;
    out.config["threads"] = thread_count();

    try {
        int code = kExitUsage;
        if (*validate_cmd) {
            out.config["subcommand"] = "validate";
            out.config["file"] = validate_path;
            code = run_validate(validate_path, validate_format, out);
        } else if (*sample_cmd) {
            out.config["subcommand"] = "sample";
            out.config["graph"] = sample_path;
            out.config["k"] = sample_k;
            bool seeded = sample_seed_opt->count() > 0;
            if (seeded) {
                out.config["seed"] = sample_seed;
            } else {
                out.config["start"] = sample_start;
            }
            code = run_sample(sample_path, sample_k, sample_start, seeded, sample_seed,
                              sample_csv, out);
        } else if (*ob_cmd) {
            out.config["subcommand"] = "oracle build";
            out.config["graph"] = ob_graph;
            out.config["k"] = ob_k;
            out.config["output"] = ob_out;
            bool seeded = ob_seed_opt->count() > 0;
            if (seeded) {
                out.config["seed"] = ob_seed;
            } else {
                out.config["start"] = ob_start;
            }
            code = run_oracle_build(ob_graph, ob_k, ob_out, ob_start, seeded, ob_seed, out);
        } else if (*oq_cmd) {
            out.config["subcommand"] = "oracle query";
            out.config["oracle"] = oq_file;
            out.config["p"] = oq_p;
            out.config["q"] = oq_q;
            code = run_oracle_query(oq_file, oq_p, oq_q, out);
        } else if (*stretch_cmd) {
            out.config["subcommand"] = "stretch";
            out.config["graph"] = stretch_graph;
            out.config["oracle"] = stretch_oracle;
            out.config["method"] = stretch_method;
            out.config["check_bounds"] = stretch_bounds;
            out.config["naive_cap"] = naive_cap;
            code = run_stretch(stretch_graph, stretch_oracle, stretch_method, stretch_bounds,
                               naive_cap, out);
        } else if (*brute_cmd) {
            out.config["subcommand"] = "brute";
            out.config["graph"] = brute_graph;
            out.config["objective"] = brute_objective;
            out.config["k"] = brute_k;
            out.config["budget"] = brute_budget;
            if (brute_objective == "exists") out.config["xi"] = brute_xi;
            code = run_brute(brute_graph, brute_objective, brute_k, brute_xi, brute_budget, out);
        } else if (*gb_cmd) {
            out.config["subcommand"] = "gadget build";
            out.config["embedding"] = gb_embedding;
            out.config["k"] = gb_k;
            out.config["xi"] = gb_xi;
            out.config["output"] = gb_out;
            code = run_gadget_build(gb_embedding, gb_k, gb_xi, gb_out, gb_sidecar, out);
        } else if (*gv_cmd) {
            out.config["subcommand"] = "gadget verify";
            out.config["embedding"] = gv_embedding;
            if (gv_k_opt->count() > 0) out.config["k"] = gv_k;
            out.config["xi"] = gv_xi;
            out.config["budget"] = gv_budget;
            code = run_gadget_verify(gv_embedding, gv_xi, gv_budget, gv_csv, out);
        } else if (*bench_cmd) {
            out.config["subcommand"] = "bench";
            out.config["graph"] = bench_graph;
            out.config["k"] = bench_k;
            out.config["queries"] = bench_queries;
            out.config["repeats"] = bench_repeats;
            out.want_timings = true; // timing is the point of bench
            code = run_bench(bench_graph, bench_k, bench_queries, bench_repeats,
                             bench_naive_cap, out);
        }
        out.print();
        return code;
    } catch (const Error& e) {
        json failure;
        failure["config"] = out.config;
        failure["error"] = e.what();
        std::cout << failure.dump(2) << "\n";
        switch (e.code()) {
        case Errc::IoError:
        case Errc::CorruptFile:
        case Errc::VersionMismatch:
        case Errc::ParseError:
            return kExitIo;
        default:
            return kExitCheckFailed;
        }
    }
}

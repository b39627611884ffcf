// mdl: command-line front end for the minor-density library.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdl/canon.hpp"
#include "mdl/densest.hpp"
#include "mdl/enumerate.hpp"
#include "mdl/error.hpp"
#include "mdl/fan.hpp"
#include "mdl/graph_io.hpp"
#include "mdl/minor.hpp"
#include "mdl/multigraph.hpp"
#include "mdl/named.hpp"
#include "mdl/spectrum.hpp"
#include "mdl/structure.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace mdl;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
    using Error::Error;
};

struct Globals {
    std::string format = "text";
    bool decimal = false;
    bool no_timing = false;
    bool unsafe_large = false;
    std::optional<int> guardrail;
    std::string cache;
};

Globals G;

// ---------------------------------------------------------------------------
// Inputs

std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string read_file(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    return read_stream(in);
}

struct GraphInput {
    std::string g6;
    std::string edges;
    std::string file;
    std::string named;

    void attach(CLI::App* app, const std::string& prefix, const std::string& what) {
        app->add_option("--" + prefix + "g6", g6, what + " as graph6 ('-' reads stdin)");
        app->add_option("--" + prefix + "edges", edges, what + " as edge list \"n=<k>; u-v, ...\"");
        app->add_option("--" + prefix + "file", file, what + " from a file (graph6 or edge list)");
        app->add_option("--" + prefix + "named", named, what + " as a named construction name:params");
    }

    [[nodiscard]] SimpleGraph load(const std::string& what) const {
        const int given = !g6.empty() + !edges.empty() + !file.empty() + !named.empty();
        if (given != 1) throw UsageError("exactly one input source is required for " + what);
        if (!g6.empty()) return decode_graph6(trim(g6 == "-" ? read_stream(std::cin) : g6));
        if (!edges.empty()) return parse_edge_list(edges);
        if (!named.empty()) return make_named(named);
        const std::string text = trim(read_file(file));
        if (text.find("n=") != std::string::npos) return parse_edge_list(text);
        return decode_graph6(text);
    }
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer '" + item + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Guardrails and caches

int env_max_n() {
    if (const char* v = std::getenv("MDL_MAX_N")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw UsageError("MDL_MAX_N must be an integer");
        }
    }
    return -1;
}

// Soft default from MDL_MAX_N, explicit --guardrail, hard ceiling unless
// --unsafe-large.
int guardrail_for(int builtin, int hard) {
    int limit = builtin;
    if (int env = env_max_n(); env > 0) limit = std::min(env, hard);
    if (G.guardrail) {
        if (*G.guardrail > builtin && !G.unsafe_large)
            throw UsageError("--guardrail above " + std::to_string(builtin) + " requires --unsafe-large");
        limit = *G.guardrail;
    } else if (G.unsafe_large) {
        limit = hard;
    }
    return std::min(limit, hard);
}

MinorSearchOptions search_options(const std::string& backend = "closure") {
    MinorSearchOptions o;
    o.guardrail = guardrail_for(kDefaultMinorGuardrail, kMaxVertices);
    if (backend == "closure") o.backend = DensestBackend::Closure;
    else if (backend == "branch-sets") o.backend = DensestBackend::BranchSets;
    else throw UsageError("unknown backend '" + backend + "'");
    return o;
}

int spectrum_limit() { return guardrail_for(kSpectrumGuardrail, kEnumerationGuardrail); }

void load_cache() {
    if (G.cache.empty() || !std::filesystem::exists(G.cache)) return;
    if (!DensestMemo::global().load(G.cache))
        std::cerr << "warning: cache '" << G.cache << "' is unreadable; starting cold\n";
}

void save_cache() {
    if (G.cache.empty()) return;
    try {
        DensestMemo::global().save(G.cache);
    } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache: " << e.what() << "\n";
    }
}

// ---------------------------------------------------------------------------
// Output helpers

bool json() { return G.format == "json"; }
bool csv() { return G.format == "csv"; }

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << r.to_double();
    return os.str();
}

std::string show(const Rational& r) { return G.decimal ? r.str() + " (~" + decimal(r) + ")" : r.str(); }

void put_rational(Json& j, const std::string& key, const Rational& r) {
    j[key] = r.str();
    if (G.decimal) j[key + "_decimal"] = r.to_double();
}

Json mask_list(const std::vector<VertexMask>& masks) {
    Json out = Json::array();
    for (VertexMask m : masks) out.push_back(mask_to_vector(m));
    return out;
}

std::string mask_text(VertexMask m) {
    std::string out = "{";
    for (int v : mask_to_vector(m)) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void require_text_or_json(const std::string& cmd) {
    if (csv()) throw UsageError(cmd + " does not support --format csv");
}

Json graph_json(const SimpleGraph& g) {
    Json j;
    j["graph6"] = encode_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    return j;
}

// ---------------------------------------------------------------------------
// Commands. Each returns the process exit code.

int cmd_density(const GraphInput& in) {
    require_text_or_json("density");
    const SimpleGraph g = in.load("the graph");
    if (json()) {
        Json j = graph_json(g);
        put_rational(j, "density", density(g));
        emit(j);
    } else {
        std::cout << show(density(g)) << "\n";
    }
    return 0;
}

int cmd_rank(const GraphInput& in) {
    require_text_or_json("rank");
    const SimpleGraph g = in.load("the graph");
    if (json()) {
        Json j = graph_json(g);
        j["components"] = component_count(g);
        j["rank"] = rank(g);
        emit(j);
    } else {
        std::cout << rank(g) << "\n";
    }
    return 0;
}

int cmd_blocks(const GraphInput& in) {
    require_text_or_json("blocks");
    const SimpleGraph g = in.load("the graph");
    const BlockDecomposition d = blocks(g);
    if (json()) {
        Json j = graph_json(g);
        j["blocks"] = mask_list(d.blocks);
        j["articulation"] = mask_to_vector(d.articulation);
        j["biconnected"] = is_biconnected(g);
        emit(j);
    } else {
        for (VertexMask b : d.blocks) std::cout << "block " << mask_text(b) << "\n";
        std::cout << "articulation " << mask_text(d.articulation) << "\n";
    }
    return 0;
}

int cmd_ears(const GraphInput& in) {
    require_text_or_json("ears");
    const SimpleGraph g = in.load("the graph");
    const EarDecomposition d = ear_decomposition(g);
    if (json()) {
        Json j = graph_json(g);
        Json ears = Json::array();
        for (const Ear& e : d.ears) ears.push_back(e.vertices);
        j["ears"] = ears;
        emit(j);
    } else {
        for (const Ear& e : d.ears) {
            std::string line;
            for (int v : e.vertices) line += (line.empty() ? "" : " ") + std::to_string(v);
            std::cout << line << "\n";
        }
    }
    return 0;
}

int cmd_minor_test(const GraphInput& host_in, const GraphInput& minor_in) {
    require_text_or_json("minor-test");
    const SimpleGraph g = host_in.load("the host graph");
    const SimpleGraph h = minor_in.load("the minor");
    check_guardrail(g, guardrail_for(kDefaultMinorGuardrail, kMaxVertices));
    const auto witness = is_minor(h, g);
    if (json()) {
        Json j;
        j["host"] = encode_graph6(g);
        j["minor"] = encode_graph6(h);
        j["is_minor"] = witness.has_value();
        j["branch_sets"] = witness ? mask_list(witness->branch_sets) : Json(nullptr);
        emit(j);
    } else {
        std::cout << (witness ? "yes" : "no") << "\n";
        if (witness)
            for (std::size_t i = 0; i < witness->branch_sets.size(); ++i)
                std::cout << i << " <- " << mask_text(witness->branch_sets[i]) << "\n";
    }
    return 0;
}

int cmd_densest(const GraphInput& in, const std::string& backend) {
    require_text_or_json("densest-minor");
    const SimpleGraph g = in.load("the graph");
    const DensestMinor d = densest_minor(g, search_options(backend));
    if (json()) {
        Json j;
        j["graph"] = encode_graph6(g);
        put_rational(j, "density", d.density);
        j["minor"] = graph_json(d.minor);
        j["branch_sets"] = mask_list(d.witness.branch_sets);
        emit(j);
    } else {
        std::cout << show(d.density) << " " << encode_graph6(d.minor) << "\n";
        for (std::size_t i = 0; i < d.witness.branch_sets.size(); ++i)
            std::cout << i << " <- " << mask_text(d.witness.branch_sets[i]) << "\n";
    }
    return 0;
}

int cmd_check_minimal(const GraphInput& in, const std::string& backend) {
    require_text_or_json("check-minimal");
    const SimpleGraph g = in.load("the graph");
    const MinimalityCertificate c = is_density_minimal(g, search_options(backend));
    if (json()) {
        Json j;
        j["graph"] = encode_graph6(g);
        j["verdict"] = c.verdict;
        put_rational(j, "density", c.subject_density);
        if (c.best_proper_minor) {
            Json b = graph_json(c.best_proper_minor->minor);
            put_rational(b, "density", c.best_proper_minor->density);
            b["branch_sets"] = mask_list(c.best_proper_minor->witness.branch_sets);
            j["best_proper_minor"] = b;
        } else {
            j["best_proper_minor"] = nullptr;
        }
        emit(j);
    } else {
        std::cout << (c.verdict ? "density-minimal" : "not density-minimal") << " " << show(c.subject_density)
                  << "\n";
        if (c.best_proper_minor)
            std::cout << "best proper minor " << encode_graph6(c.best_proper_minor->minor) << " "
                      << show(c.best_proper_minor->density) << "\n";
    }
    return 0;
}

int cmd_check_rank_minimal(const GraphInput& in) {
    require_text_or_json("check-rank-minimal");
    const SimpleGraph g = in.load("the graph");
    const bool verdict = is_rank_minimal(g);
    if (json()) {
        Json j = graph_json(g);
        j["rank"] = rank(g);
        j["verdict"] = verdict;
        emit(j);
    } else {
        std::cout << (verdict ? "rank-minimal" : "not rank-minimal") << " rank " << rank(g) << "\n";
    }
    return 0;
}

int cmd_fan(const GraphInput& in, const std::string& shared, int k, bool densest) {
    require_text_or_json("fan");
    const SimpleGraph base = in.load("the base graph");
    std::vector<int> s = parse_int_list(shared);
    for (int v : s)
        if (v < 0 || v >= base.order()) throw UsageError("shared vertex " + std::to_string(v) + " out of range");
    const FanSpec spec{base, vector_to_mask(s), k};
    const SimpleGraph fan = build_fan(spec);
    std::optional<DensestFanMinor> best;
    if (densest) best = densest_fan_minor(spec, search_options().guardrail);
    if (json()) {
        Json j = graph_json(fan);
        put_rational(j, "density", density(fan));
        if (best) {
            Json b = graph_json(best->tracked.minor);
            b["shared"] = mask_to_vector(best->tracked.shared_image);
            put_rational(b, "fan_density", best->density);
            j["densest_fan_minor"] = b;
        }
        emit(j);
    } else {
        std::cout << encode_graph6(fan) << " n=" << fan.order() << " m=" << fan.size() << " density "
                  << show(density(fan)) << "\n";
        if (best)
            std::cout << "densest fan minor " << encode_graph6(best->tracked.minor) << " shared "
                      << mask_text(best->tracked.shared_image) << " density " << show(best->density) << "\n";
    }
    return 0;
}

int cmd_apex_fan(const GraphInput& in, int k) {
    require_text_or_json("apex-fan");
    const SimpleGraph g = in.load("the graph");
    const ApexFan a = apex_fan(g, k);
    if (json()) {
        Json j = graph_json(a.fan);
        put_rational(j, "predicted_density", a.predicted_density);
        put_rational(j, "measured_density", density(a.fan));
        j["match"] = a.predicted_density == density(a.fan);
        emit(j);
    } else {
        std::cout << encode_graph6(a.fan) << " predicted " << show(a.predicted_density) << " measured "
                  << show(density(a.fan)) << "\n";
    }
    return 0;
}

int cmd_cf_density(const GraphInput& in, const std::string& backend) {
    require_text_or_json("cf-density");
    const SimpleGraph g = in.load("the generator");
    const Rational d = component_family_limiting_density(g, search_options(backend));
    if (json()) {
        Json j;
        j["generator"] = encode_graph6(g);
        put_rational(j, "limiting_density", d);
        emit(j);
    } else {
        std::cout << show(d) << "\n";
    }
    return 0;
}

struct EnumerateArgs {
    int max_n = 4;
    int min_n = 1;
    std::optional<int> max_edges;
    std::string connectivity = "any";
    std::optional<int> rank;
    std::string max_density;
    bool strict = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
    EnumerationFilter f;
    f.max_n = a.max_n;
    f.min_n = a.min_n;
    if (a.max_n > guardrail_for(kEnumerationGuardrail, kEnumerationGuardrail))
        throw GuardrailExceeded("max-n above the enumeration guardrail");
    f.max_edges = a.max_edges;
    if (a.connectivity == "any") f.connectivity = Connectivity::Any;
    else if (a.connectivity == "connected") f.connectivity = Connectivity::Connected;
    else if (a.connectivity == "biconnected") f.connectivity = Connectivity::Biconnected;
    else throw UsageError("connectivity must be any, connected or biconnected");
    f.exact_rank = a.rank;
    if (!a.max_density.empty()) f.max_density = Rational::parse(a.max_density);
    f.strict_density = a.strict;
    const auto graphs = enumerate(f);
    if (json()) {
        Json j;
        j["count"] = graphs.size();
        Json list = Json::array();
        for (const SimpleGraph& g : graphs) list.push_back(graph_json(g));
        j["graphs"] = list;
        emit(j);
    } else if (csv()) {
        std::cout << "graph6,n,m\n";
        for (const SimpleGraph& g : graphs) std::cout << encode_graph6(g) << "," << g.order() << "," << g.size() << "\n";
    } else {
        for (const SimpleGraph& g : graphs) std::cout << encode_graph6(g) << "\n";
    }
    return 0;
}

int cmd_spectrum(int max_n, const std::string& cap, const std::string& backend) {
    std::optional<Rational> c;
    if (!cap.empty() && cap != "none") c = Rational::parse(cap);
    const SpectrumReport r = enumerate_density_minimal(max_n, c, search_options(backend), spectrum_limit());
    if (json()) {
        std::cout << spectrum_to_json(r);
    } else if (csv()) {
        std::cout << spectrum_to_csv(r);
    } else {
        for (const SpectrumEntry& e : r.entries)
            std::cout << show(e.density) << " " << e.graph6 << " n=" << e.order() << " m=" << e.witness.size() << "\n";
    }
    return 0;
}

int cmd_next_density(const std::string& threshold, int max_n) {
    require_text_or_json("next-density");
    if (max_n > spectrum_limit()) throw GuardrailExceeded("max-n above the spectrum guardrail");
    const Rational t = Rational::parse(threshold);
    const auto next = next_density(t, max_n, search_options());
    if (json()) {
        Json j;
        j["threshold"] = t.str();
        j["max_n"] = max_n;
        j["bounded_search"] = true;
        j["next"] = next ? Json(next->str()) : Json(nullptr);
        emit(j);
    } else {
        std::cout << (next ? show(*next) : "none") << " (search over graphs with at most " << max_n
                  << " vertices)\n";
    }
    return 0;
}

int finish_report(const VerificationReport& r) {
    if (csv()) {
        std::cout << "counterexample_graph6\n";
        for (const std::string& g : r.counterexamples) std::cout << g << "\n";
    } else if (json()) {
        std::cout << report_to_json(r, !G.no_timing);
    } else {
        std::cout << report_to_text(r, !G.no_timing);
    }
    return r.pass ? 0 : kExitFail;
}

Multigraph load_multigraph(const std::string& text, const std::string& file) {
    if (text.empty() == file.empty()) throw UsageError("exactly one of --mg or --mg-file is required");
    return parse_multigraph(text.empty() ? trim(read_file(file)) : text);
}

int cmd_mg(const std::string& action, const std::string& text, const std::string& file,
           const std::vector<std::string>& generators, bool unbounded) {
    require_text_or_json("mg");
    Json j;
    std::string line;
    if (action == "family-density") {
        MgFamilyDescriptor desc;
        for (const std::string& g : generators) desc.generators.push_back(parse_multigraph(g));
        if (!text.empty() || !file.empty()) desc.generators.push_back(load_multigraph(text, file));
        desc.unbounded_bonds = unbounded;
        for (const Multigraph& g : desc.generators)
            if (g.order() > guardrail_for(kMultigraphGuardrail, kMultigraphGuardrail))
                throw GuardrailExceeded("generator above the multigraph guardrail");
        const MgFamilyDensity d = mg_component_family_density(desc);
        j["generators"] = desc.generators.size();
        j["unbounded"] = d.unbounded;
        if (d.unbounded) {
            j["limiting_density"] = nullptr;
            line = "unbounded";
        } else {
            put_rational(j, "limiting_density", d.value);
            j["integer_or_superparticular"] = is_integer_or_superparticular(d.value);
            line = show(d.value);
        }
    } else {
        const Multigraph g = load_multigraph(text, file);
        j["multigraph"] = format_multigraph(g);
        if (action == "density") {
            put_rational(j, "density", mg_density(g));
            j["rank"] = mg_rank(g);
            line = show(mg_density(g)) + " rank " + std::to_string(mg_rank(g));
        } else if (action == "densest-minor") {
            const MgDensest d = mg_densest_minor(g);
            j["minor"] = format_multigraph(d.minor);
            put_rational(j, "density", d.density);
            line = show(d.density) + " " + format_multigraph(d.minor);
        } else if (action == "check-minimal") {
            const bool v = mg_is_density_minimal(g, guardrail_for(kMultigraphGuardrail, kMultigraphGuardrail));
            j["verdict"] = v;
            put_rational(j, "density", mg_density(g));
            line = std::string(v ? "density-minimal " : "not density-minimal ") + show(mg_density(g));
        } else {
            throw UsageError("unknown mg action '" + action + "'");
        }
    }
    if (json()) emit(j);
    else std::cout << line << "\n";
    return 0;
}

int cmd_encode(const GraphInput& in) {
    const SimpleGraph g = in.load("the graph");
    if (json()) {
        emit(graph_json(g));
    } else {
        std::cout << encode_graph6(g) << "\n";
    }
    return 0;
}

int cmd_decode(const std::string& g6) {
    const SimpleGraph g = decode_graph6(trim(g6 == "-" ? read_stream(std::cin) : g6));
    if (json()) {
        Json j = graph_json(g);
        Json edges = Json::array();
        for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
        j["edges"] = edges;
        emit(j);
    } else {
        std::cout << format_edge_list(g) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-minor density laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "mdl 0.1.0");
    app.add_option("--format", G.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--decimal", G.decimal, "Add approximate decimal values next to exact ones");
    app.add_flag("--no-timing", G.no_timing, "Write wall_time_ms as 0 in reports");
    app.add_flag("--unsafe-large", G.unsafe_large, "Lift size guardrails");
    app.add_option("--guardrail", G.guardrail, "Vertex limit for exhaustive searches");
    app.add_option("--cache", G.cache, "Densest-minor memo file, loaded at start and saved at exit");

    std::function<int()> run;
    auto simple = [&](const std::string& name, const std::string& help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        auto in = std::make_shared<GraphInput>();
        in->attach(sub, "", "graph");
        sub->callback([&run, in, fn] { run = [in, fn] { return fn(*in); }; });
        return std::make_pair(sub, in);
    };

    simple("density", "Edge density m/n", cmd_density);
    simple("rank", "Cycle rank m-n+c", cmd_rank);
    simple("blocks", "Biconnected blocks and cut vertices", cmd_blocks);
    simple("ears", "Open ear decomposition", cmd_ears);
    simple("check-rank-minimal", "Whether every one-step minor lowers the rank", cmd_check_rank_minimal);
    simple("encode", "Print graph6", cmd_encode);

    std::string backend = "closure";
    {
        auto [sub, in] = simple("densest-minor", "Densest minor with a branch-set witness", [&](const GraphInput& i) {
            return cmd_densest(i, backend);
        });
        sub->add_option("--backend", backend, "closure or branch-sets")->capture_default_str();
    }
    {
        auto [sub, in] = simple("check-minimal", "Density-minimality verdict with a certificate",
                                [&](const GraphInput& i) { return cmd_check_minimal(i, backend); });
        sub->add_option("--backend", backend, "closure or branch-sets")->capture_default_str();
    }
    {
        auto [sub, in] = simple("cf-density", "Limiting density of the component family of a graph",
                                [&](const GraphInput& i) { return cmd_cf_density(i, backend); });
        sub->add_option("--backend", backend, "closure or branch-sets")->capture_default_str();
    }

    {
        auto* sub = app.add_subcommand("minor-test", "Whether one graph is a minor of another");
        auto host = std::make_shared<GraphInput>();
        auto minor = std::make_shared<GraphInput>();
        host->attach(sub, "", "host graph");
        minor->attach(sub, "minor-", "candidate minor");
        sub->callback([&run, host, minor] { run = [host, minor] { return cmd_minor_test(*host, *minor); }; });
    }

    std::string shared;
    int k = 2;
    bool densest = false;
    {
        auto [sub, in] = simple("fan", "Build Fan(G, S, k)",
                                [&](const GraphInput& i) { return cmd_fan(i, shared, k, densest); });
        sub->add_option("--shared", shared, "Comma-separated shared vertices");
        sub->add_option("-k,--copies", k, "Number of copies")->capture_default_str();
        sub->add_flag("--densest", densest, "Also report the densest fan minor");
    }
    {
        auto [sub, in] = simple("apex-fan", "Fan of G plus an apex shared across copies",
                                [&](const GraphInput& i) { return cmd_apex_fan(i, k); });
        sub->add_option("-k,--copies", k, "Number of copies")->capture_default_str();
    }

    EnumerateArgs ea;
    {
        auto* sub = app.add_subcommand("enumerate", "Isomorph-free graph enumeration");
        sub->add_option("--max-n", ea.max_n, "Largest vertex count")->capture_default_str();
        sub->add_option("--min-n", ea.min_n, "Smallest vertex count")->capture_default_str();
        sub->add_option("--max-edges", ea.max_edges, "Edge bound");
        sub->add_option("--connectivity", ea.connectivity, "any, connected or biconnected")->capture_default_str();
        sub->add_option("--rank", ea.rank, "Exact cycle rank");
        sub->add_option("--max-density", ea.max_density, "Density bound p/q");
        sub->add_flag("--strict", ea.strict, "Make the density bound exclusive");
        sub->callback([&] { run = [&] { return cmd_enumerate(ea); }; });
    }

    int max_n = 6;
    std::string cap;
    {
        auto* sub = app.add_subcommand("spectrum", "Density-minimal graphs and their densities");
        sub->add_option("--max-n", max_n, "Largest vertex count")->capture_default_str();
        sub->add_option("--cap", cap, "Exclusive density bound p/q");
        sub->add_option("--backend", backend, "closure or branch-sets")->capture_default_str();
        sub->callback([&] { run = [&] { return cmd_spectrum(max_n, cap, backend); }; });
    }
    std::string threshold;
    {
        auto* sub = app.add_subcommand("next-density", "Smallest density-minimal density above a threshold");
        sub->add_option("--threshold", threshold, "Threshold p/q")->required();
        sub->add_option("--max-n", max_n, "Largest vertex count")->capture_default_str();
        sub->callback([&] { run = [&] { return cmd_next_density(threshold, max_n); }; });
    }

    auto* verify = app.add_subcommand("verify", "Exhaustive checks");
    verify->require_subcommand(1);
    LowSpectrumOptions low;
    std::vector<std::string> drop;
    {
        auto* sub = verify->add_subcommand("low-spectrum", "Classification of densities below 3/2");
        sub->add_option("--max-n", low.max_n, "Largest vertex count")->capture_default_str();
        sub->add_option("--drop", drop, "Remove values from the predicted set");
        sub->add_option("--backend", backend, "closure or branch-sets")->capture_default_str();
        sub->callback([&] {
            run = [&] {
                if (low.max_n > spectrum_limit()) throw GuardrailExceeded("max-n above the spectrum guardrail");
                for (const std::string& d : drop) low.drop.push_back(Rational::parse(d));
                low.search = search_options(backend);
                return finish_report(verify_low_density_classification(low));
            };
        });
    }
    int rank4_n = 8;
    {
        auto* sub = verify->add_subcommand("rank4", "Biconnected rank-4 graphs reach density 3/2");
        sub->add_option("--max-n", rank4_n, "Largest vertex count")->capture_default_str();
        sub->callback([&] {
            run = [&] {
                if (rank4_n > spectrum_limit()) throw GuardrailExceeded("max-n above the spectrum guardrail");
                return finish_report(verify_rank4_lemma(rank4_n, search_options()));
            };
        });
    }
    verify->add_subcommand("blocks", "Rank-minimal biconnected graphs of rank 1..3")->callback([&] {
        run = [] { return finish_report(verify_rank_minimal_blocks()); };
    });
    FanCheckLimits fan_limits;
    {
        auto* sub = verify->add_subcommand("fan-minimality", "Densest fan minors match brute force");
        sub->add_option("--max-base", fan_limits.max_base, "Largest base graph")->capture_default_str();
        sub->add_option("--max-shared", fan_limits.max_shared, "Largest shared set")->capture_default_str();
        sub->add_option("--max-fan", fan_limits.max_fan, "Largest fan")->capture_default_str();
        sub->callback([&] {
            run = [&] {
                MinorSearchOptions o = search_options();
                if (fan_limits.max_fan > o.guardrail) throw GuardrailExceeded("max-fan above the minor guardrail");
                return finish_report(verify_fan_minimality(fan_limits, o));
            };
        });
    }
    MultiCheckLimits multi;
    {
        auto* sub = verify->add_subcommand("multi", "Multigraph density classification");
        sub->add_option("--max-n", multi.max_n, "Largest vertex count")->capture_default_str();
        sub->add_option("--max-m", multi.max_m, "Largest edge count")->capture_default_str();
        sub->add_option("--random-sets", multi.random_sets, "Random generator sets")->capture_default_str();
        sub->add_option("--seed", multi.seed, "Random seed")->capture_default_str();
        sub->callback([&] {
            run = [&] {
                if (multi.max_n > guardrail_for(kMultigraphGuardrail, kMultigraphGuardrail))
                    throw GuardrailExceeded("max-n above the multigraph guardrail");
                return finish_report(verify_multigraph_classification(multi));
            };
        });
    }

    std::string mg_text;
    std::string mg_file;
    std::vector<std::string> generators;
    bool unbounded = false;
    auto* mg = app.add_subcommand("mg", "Multigraph operations");
    mg->require_subcommand(1);
    for (const std::string action : {"density", "densest-minor", "check-minimal", "family-density"}) {
        auto* sub = mg->add_subcommand(action, "Multigraph " + action);
        sub->add_option("--mg", mg_text, "Multigraph \"n=<k>; u-v:mult, ...; loops v:count, ...\"");
        sub->add_option("--mg-file", mg_file, "Multigraph from a file ('-' reads stdin)");
        if (action == "family-density") {
            sub->add_option("--generator", generators, "Generator multigraph (repeatable)");
            sub->add_flag("--unbounded", unbounded, "Family grows bonds without limit");
        }
        sub->callback([&, action] { run = [&, action] { return cmd_mg(action, mg_text, mg_file, generators, unbounded); }; });
    }

    std::string g6;
    {
        auto* sub = app.add_subcommand("decode", "Print the edge list of a graph6 string");
        sub->add_option("g6", g6, "graph6 string ('-' reads stdin)")->required();
        sub->callback([&] { run = [&] { return cmd_decode(g6); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        load_cache();
        const int code = run();
        std::cout.flush();
        save_cache();
        return code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

#include "ratsing/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ratsing/graph_algo.hpp"
#include "ratsing/invariants.hpp"

namespace ratsing::cli {

using nlohmann::json;

namespace {

json integer_json(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

json vertices_json(const VertexSet& vertices) {
    json out = json::array();
    for (Vertex v : vertices) out.push_back(v + 1);
    return out;
}

json filtration_json(const Filtration& chain) {
    json steps = json::array();
    for (const auto& step : chain.steps) {
        steps.push_back({{"increment", to_json(step.increment)}, {"cycle", to_json(step.cycle)}});
    }
    return {{"base", to_json(chain.base)}, {"steps", steps}};
}

std::string read_all(std::istream& is) {
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

DualGraph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return parse_graph(read_all(in));
    std::ifstream file(path);
    if (!file) throw DomainError("cannot open graph file '" + path + "'");
    return parse_graph(read_all(file));
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw DomainError("cannot write '" + path + "'");
    file << text;
}

json document(const std::string& command, const DualGraph* graph, json results) {
    return {{"tool", kToolName},
            {"version", kVersion},
            {"command", command},
            {"graph", graph ? to_json(*graph) : json(nullptr)},
            {"results", std::move(results)}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_graph(std::ostream& os, const DualGraph& graph) {
    os << "dual graph: " << graph.size() << (graph.size() == 1 ? " vertex\n" : " vertices\n");
    for (Vertex v = 0; v < graph.size(); ++v) {
        os << "  E" << v + 1 << " [" << graph.weight(v) << "]";
        const auto& nbrs = graph.neighbors(v);
        if (!nbrs.empty()) os << " --";
        for (Vertex u : nbrs) os << " E" << u + 1;
        os << '\n';
    }
}

// Coefficients per vertex, special-module vertices starred.
std::string starred_coefficients(const Cycle& z, const VertexSet& marked) {
    std::ostringstream os;
    for (Vertex v = 0; v < z.size(); ++v) {
        if (v) os << ' ';
        os << 'E' << v + 1 << '=' << z[v];
        if (std::binary_search(marked.begin(), marked.end(), v)) os << '*';
    }
    return os.str();
}

void render_entries(std::ostream& os, const std::string& title, const std::vector<ClassificationEntry>& entries) {
    os << title << " cycles (" << entries.size() << "):\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        os << "  [" << i + 1 << "] Z = " << e.cycle << "  colength " << e.colength << "  multiplicity "
           << e.multiplicity << "  min_gens " << e.min_gens << "  kind " << to_string(e.kind) << '\n';
        os << "      " << starred_coefficients(e.cycle, e.module_indices) << '\n';
        os << "      chain: Z_0 = " << e.chain.base;
        for (std::size_t k = 0; k < e.chain.steps.size(); ++k) {
            os << "; + Y_" << k + 1 << " = " << e.chain.steps[k].increment;
        }
        os << '\n';
    }
}

void render_cycle_list(std::ostream& os, const std::string& title, const std::vector<Cycle>& cycles) {
    os << title << " (" << cycles.size() << "):\n";
    for (const auto& z : cycles) os << "  " << z << '\n';
}

struct Context {
    std::string format = "table";
    std::istream& in;
    std::ostream& out;
    std::ostream& err;

    bool json_output() const { return format == "json"; }
    void emit(const json& doc) const { out << doc.dump(2) << '\n'; }
};

int cmd_graph(const Context& ctx, const DualGraph& graph, const std::string& out_path) {
    const std::string text = serialize_graph(graph);
    if (!out_path.empty()) write_text_file(out_path, text);
    if (ctx.json_output()) {
        ctx.emit(document("graph", &graph, {{"text", text}}));
    } else if (out_path.empty()) {
        ctx.out << text;
    } else {
        ctx.out << "wrote " << out_path << '\n';
    }
    return kSuccess;
}

int cmd_validate(const Context& ctx, const DualGraph& graph) {
    const ValidationReport report = validate(graph);
    if (ctx.json_output()) {
        ctx.emit(document("validate", &graph, to_json(report)));
    } else {
        render_graph(ctx.out, graph);
        ctx.out << "connected          " << yes_no(report.connected) << '\n'
                << "negative definite  " << yes_no(report.negative_definite) << '\n'
                << "tree               " << yes_no(report.tree) << '\n'
                << "rational           " << yes_no(report.rational) << '\n'
                << "gorenstein         " << yes_no(report.gorenstein) << '\n'
                << "multiplicity       " << (report.multiplicity ? report.multiplicity->str() : std::string("-"))
                << '\n';
    }
    for (const auto& f : report.failures) ctx.err << "finding: " << f << '\n';
    return report.ok() ? kSuccess : kValidationFailure;
}

int cmd_fundamental(const Context& ctx, const DualGraph& graph, const std::string& support_text) {
    const VertexSet support = support_text.empty() ? all_vertices(graph) : parse_vertex_list(support_text, graph.size());
    const LauferTrace trace = laufer(graph, support);
    if (ctx.json_output()) {
        ctx.emit(document("fundamental", &graph,
                          {{"support", vertices_json(support)},
                           {"cycle", to_json(trace.cycle)},
                           {"laufer_additions", vertices_json(trace.additions)}}));
    } else {
        ctx.out << "support  ";
        for (Vertex v : support) ctx.out << " E" << v + 1;
        ctx.out << "\nfundamental cycle " << trace.cycle << "\nlaufer steps " << trace.additions.size() << '\n';
    }
    return kSuccess;
}

int cmd_invariants(const Context& ctx, const DualGraph& graph, const std::string& cycle_text) {
    const Cycle z = parse_cycle(cycle_text);
    if (z.size() != graph.size()) {
        throw DimensionError("cycle has " + std::to_string(z.size()) + " coefficients, graph has " +
                             std::to_string(graph.size()) + " vertices");
    }
    json results{{"cycle", to_json(z)},
                 {"self_intersection", integer_json(intersection(graph, z, z))},
                 {"canonical_degree", integer_json(canonical_degree(graph, z))},
                 {"virtual_genus", integer_json(virtual_genus(graph, z))}};

    const bool positive = z.is_positive();
    const bool anti_nef = z.is_nonnegative() && is_anti_nef(graph, z);
    results["anti_nef"] = z.is_nonnegative() ? json(anti_nef) : json(nullptr);

    const ValidationReport report = validate(graph, ValidateOptions{0});
    if (positive && anti_nef && report.ok()) {
        const Singularity sing(graph);
        results["colength"] = integer_json(sing.colength(z));
        results["multiplicity"] = integer_json(sing.multiplicity(z));
        results["min_gens"] = integer_json(sing.min_gens(z));
        results["u_invariant"] = integer_json(sing.u_invariant(z));
        results["module_indices"] = vertices_json(sing.special_module_indices(z));
        results["filtration"] = filtration_json(sing.filtration(z));
        results["special"] = is_special_cycle(sing, z);
        try {
            results["ulrich"] = is_ulrich_cycle(sing, z);
        } catch (const UnsupportedInputError& e) {
            results["ulrich"] = nullptr;
            ctx.err << "note: " << e.what() << '\n';
        }
    } else if (!report.ok()) {
        ctx.err << "note: graph is not a valid rational resolution graph; ideal invariants skipped\n";
    } else {
        ctx.err << "note: cycle is not positive anti-nef; ideal invariants skipped\n";
    }

    if (ctx.json_output()) {
        ctx.emit(document("invariants", &graph, results));
        return kSuccess;
    }
    auto& os = ctx.out;
    os << "cycle              " << z << '\n'
       << "Z^2                " << results["self_intersection"].dump() << '\n'
       << "K.Z                " << results["canonical_degree"].dump() << '\n'
       << "p_a                " << results["virtual_genus"].dump() << '\n'
       << "anti-nef           " << (results["anti_nef"].is_null() ? "n/a" : yes_no(anti_nef)) << '\n';
    if (results.contains("colength")) {
        const VertexSet marked = Singularity(graph).special_module_indices(z);
        os << "colength           " << results["colength"].dump() << '\n'
           << "multiplicity       " << results["multiplicity"].dump() << '\n'
           << "min_gens           " << results["min_gens"].dump() << '\n'
           << "U                  " << results["u_invariant"].dump() << '\n'
           << "special            " << yes_no(results["special"].get<bool>()) << '\n'
           << "ulrich             "
           << (results["ulrich"].is_null() ? std::string("n/a") : yes_no(results["ulrich"].get<bool>())) << '\n'
           << "modules            " << starred_coefficients(z, marked) << '\n';
        const Filtration chain = Singularity(graph).filtration(z);
        os << "filtration         Z_0 = " << chain.base;
        for (std::size_t k = 0; k < chain.steps.size(); ++k) {
            os << "; + Y_" << k + 1 << " = " << chain.steps[k].increment;
        }
        os << '\n';
    }
    return kSuccess;
}

int cmd_classify(const Context& ctx, const DualGraph& graph, bool special_only, bool ulrich_only,
                 std::optional<std::size_t> max_colength, std::optional<std::size_t> max_steps) {
    const bool want_special = !ulrich_only;
    const bool want_ulrich = !special_only;
    json results = json::object();
    std::vector<ClassificationEntry> special;
    std::vector<ClassificationEntry> ulrich;
    if (want_special) special = enumerate_special(graph, max_colength);
    if (want_ulrich) ulrich = enumerate_ulrich(graph, max_steps);

    if (ctx.json_output()) {
        auto list = [](const std::vector<ClassificationEntry>& entries) {
            json arr = json::array();
            for (const auto& e : entries) arr.push_back(to_json(e));
            return arr;
        };
        if (want_special) results["special"] = list(special);
        if (want_ulrich) results["ulrich"] = list(ulrich);
        ctx.emit(document("classify", &graph, results));
    } else {
        render_graph(ctx.out, graph);
        if (want_special) render_entries(ctx.out, "special", special);
        if (want_ulrich) render_entries(ctx.out, "ulrich", ulrich);
    }
    return kSuccess;
}

int cmd_oracle(const Context& ctx, const DualGraph& graph, int bound) {
    const OracleResult result = oracle_classify(graph, bound);
    if (ctx.json_output()) {
        auto list = [](const std::vector<Cycle>& cycles) {
            json arr = json::array();
            for (const auto& z : cycles) arr.push_back(to_json(z));
            return arr;
        };
        ctx.emit(document("oracle", &graph,
                          {{"bound", bound}, {"special", list(result.special)}, {"ulrich", list(result.ulrich)}}));
    } else {
        render_graph(ctx.out, graph);
        ctx.out << "anti-nef cycles up to " << bound << " Z_0\n";
        render_cycle_list(ctx.out, "special", result.special);
        render_cycle_list(ctx.out, "ulrich", result.ulrich);
    }
    return kSuccess;
}

int cmd_verify_rdp(const Context& ctx, AdeFamily family, int index) {
    const RdpVerification report = verify_rdp(family, index);
    const DualGraph graph = build_ade(family, index);
    if (ctx.json_output()) {
        json cycles = json::array();
        for (const auto& e : report.enumerated) cycles.push_back(to_json(e));
        json golden = json::array();
        for (const auto& g : report.golden) {
            golden.push_back({{"label", g.label}, {"cycle", to_json(g.cycle)}, {"colength", integer_json(g.colength)}});
        }
        json missing = json::array();
        for (const auto& z : report.missing) missing.push_back(to_json(z));
        json unexpected = json::array();
        for (const auto& z : report.unexpected) unexpected.push_back(to_json(z));
        ctx.emit(document("verify-rdp", &graph,
                          {{"family", to_string(family)},
                           {"index", index},
                           {"expected_count", report.expected_count},
                           {"count", report.enumerated.size()},
                           {"count_ok", report.count_ok},
                           {"match", report.matches()},
                           {"cycles", cycles},
                           {"golden", golden},
                           {"missing", missing},
                           {"unexpected", unexpected},
                           {"colength_mismatches", report.colength_mismatches}}));
    } else {
        render_graph(ctx.out, graph);
        render_entries(ctx.out, "ulrich", report.enumerated);
        ctx.out << "expected count " << report.expected_count << ", found " << report.enumerated.size() << '\n'
                << (report.matches() ? "match" : "MISMATCH") << '\n';
    }
    for (const auto& z : report.missing) ctx.err << "missing: " << z << '\n';
    for (const auto& z : report.unexpected) ctx.err << "unexpected: " << z << '\n';
    for (const auto& s : report.colength_mismatches) ctx.err << "colength: " << s << '\n';
    if (!report.count_ok) ctx.err << "count formula violated\n";
    return report.matches() ? kSuccess : kVerificationMismatch;
}

AdeFamily family_or_throw(const std::string& text) {
    auto family = parse_ade_family(text);
    if (!family) throw DomainError("unknown ADE family '" + text + "' (expected A, D or E)");
    return *family;
}

}  // namespace

json to_json(const DualGraph& graph) {
    json edges = json::array();
    for (auto [a, b] : graph.edges()) edges.push_back({a + 1, b + 1});
    return {{"vertices", graph.size()}, {"weights", graph.weights()}, {"edges", edges}};
}

json to_json(const Cycle& z) {
    json out = json::array();
    for (const auto& c : z.coeffs()) out.push_back(integer_json(c));
    return out;
}

json to_json(const ClassificationEntry& entry) {
    return {{"cycle", to_json(entry.cycle)},
            {"colength", integer_json(entry.colength)},
            {"multiplicity", integer_json(entry.multiplicity)},
            {"min_gens", integer_json(entry.min_gens)},
            {"module_indices", vertices_json(entry.module_indices)},
            {"chain", filtration_json(entry.chain)},
            {"kind", to_string(entry.kind)}};
}

json to_json(const ValidationReport& report) {
    return {{"connected", report.connected},
            {"negative_definite", report.negative_definite},
            {"tree", report.tree},
            {"rational", report.rational},
            {"gorenstein", report.gorenstein},
            {"multiplicity", report.multiplicity ? integer_json(*report.multiplicity) : json(nullptr)},
            {"failures", report.failures},
            {"ok", report.ok()}};
}

Cycle parse_cycle(const std::string& text) {
    std::vector<Integer> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        const bool digits = !item.empty() &&
                            std::all_of(item.begin() + (item[0] == '-' ? 1 : 0), item.end(), ::isdigit) &&
                            item != "-";
        if (!digits) throw DomainError("bad cycle coefficient '" + item + "' in '" + text + "'");
        coeffs.emplace_back(item);
    }
    if (coeffs.empty()) throw DomainError("empty cycle");
    return Cycle(std::move(coeffs));
}

VertexSet parse_vertex_list(const std::string& text, std::size_t vertex_count) {
    VertexSet out;
    const Cycle indices = parse_cycle(text);
    for (const auto& c : indices.coeffs()) {
        if (c < 1 || c > vertex_count) {
            throw DomainError("vertex " + c.str() + " outside 1.." + std::to_string(vertex_count));
        }
        out.push_back(c.convert_to<Vertex>() - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Special and Ulrich cycles on resolution graphs of rational surface singularities", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Context ctx{"table", in, out, err};
    app.add_option("--format", ctx.format, "table or json")->check(CLI::IsMember({"table", "json"}));

    std::string graph_path = "-";
    auto add_graph_option = [&](CLI::App* sub) {
        sub->add_option("--graph", graph_path, "graph file, '-' for stdin")->capture_default_str();
        sub->fallthrough();
    };

    auto* graph_cmd = app.add_subcommand("graph", "build or load a dual graph and print it in text format");
    graph_cmd->require_subcommand(1);
    graph_cmd->fallthrough();
    std::string out_path;
    graph_cmd->add_option("--out", out_path, "also write the graph to this file");

    std::string family_text;
    int index = 0;
    auto* ade_cmd = graph_cmd->add_subcommand("ade", "Dynkin diagram A_n, D_n or E_n");
    ade_cmd->add_option("--family", family_text, "A, D or E")->required();
    ade_cmd->add_option("--index", index, "n")->required();
    ade_cmd->fallthrough();

    std::int64_t cyclic_n = 0;
    std::int64_t cyclic_q = 0;
    auto* cyclic_cmd = graph_cmd->add_subcommand("cyclic", "cyclic quotient 1/n(1,q)");
    cyclic_cmd->add_option("--n", cyclic_n)->required();
    cyclic_cmd->add_option("--q", cyclic_q)->required();
    cyclic_cmd->fallthrough();

    std::string load_path;
    auto* load_cmd = graph_cmd->add_subcommand("load", "read a graph file and normalise it");
    load_cmd->add_option("file", load_path, "graph file, '-' for stdin")->required();
    load_cmd->fallthrough();

    auto* validate_cmd = app.add_subcommand("validate", "structural checks: connected, definite, rational, Gorenstein");
    add_graph_option(validate_cmd);

    std::string support_text;
    auto* fundamental_cmd = app.add_subcommand("fundamental", "fundamental cycle, optionally on a sub-support");
    add_graph_option(fundamental_cmd);
    fundamental_cmd->add_option("--support", support_text, "comma-separated 1-based vertices");

    std::string cycle_text;
    auto* invariants_cmd = app.add_subcommand("invariants", "numerical invariants of one cycle");
    add_graph_option(invariants_cmd);
    invariants_cmd->add_option("--cycle", cycle_text, "comma-separated coefficients in vertex order")->required();

    bool special_only = false;
    bool ulrich_only = false;
    std::optional<std::size_t> max_colength;
    std::optional<std::size_t> max_steps;
    auto* classify_cmd = app.add_subcommand("classify", "enumerate special and/or Ulrich cycles");
    add_graph_option(classify_cmd);
    auto* special_flag = classify_cmd->add_flag("--special", special_only, "special cycles only");
    classify_cmd->add_flag("--ulrich", ulrich_only, "Ulrich cycles only")->excludes(special_flag);
    classify_cmd->add_option("--max-colength", max_colength, "limit for special cycles");
    classify_cmd->add_option("--max-steps", max_steps, "chain depth cap for Ulrich cycles (default 10 r)");

    int bound = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force classification of anti-nef Z <= bound Z_0");
    add_graph_option(oracle_cmd);
    oracle_cmd->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify-rdp", "compare enumerated Ulrich cycles with the closed-form table");
    verify_cmd->add_option("--family", family_text, "A, D or E")->required();
    verify_cmd->add_option("--index", index, "n")->required();
    verify_cmd->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*graph_cmd) {
            if (*ade_cmd) return cmd_graph(ctx, build_ade(family_or_throw(family_text), index), out_path);
            if (*cyclic_cmd) return cmd_graph(ctx, build_cyclic(cyclic_n, cyclic_q), out_path);
            return cmd_graph(ctx, load_graph(load_path, in), out_path);
        }
        if (*verify_cmd) return cmd_verify_rdp(ctx, family_or_throw(family_text), index);

        const DualGraph graph = load_graph(graph_path, in);
        if (*validate_cmd) return cmd_validate(ctx, graph);
        if (*fundamental_cmd) return cmd_fundamental(ctx, graph, support_text);
        if (*invariants_cmd) return cmd_invariants(ctx, graph, cycle_text);
        if (*classify_cmd) return cmd_classify(ctx, graph, special_only, ulrich_only, max_colength, max_steps);
        if (*oracle_cmd) return cmd_oracle(ctx, graph, bound);
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    err << app.help();
    return kUsageError;
}

}  // namespace ratsing::cli

#include "inner_rates/cli.hpp"

#include "inner_rates/contact.hpp"
#include "inner_rates/document.hpp"
#include "inner_rates/modification.hpp"
#include "inner_rates/polar_enum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace inner_rates {

namespace {

struct Options {
    bool json = false;
    std::string metric = "skeletal";
    std::string file;
    std::vector<std::string> edge_ends;
    std::string vertex;
    int transfer_l = 0;
    int transfer_p = 0;
    std::string contact_a;
    std::string contact_b;
    bool lenient = false;
    unsigned threads = 1;
};

// Failure that maps to an exit code without an exception type of its own.
struct Exit {
    int code;
    std::string message;
};

struct Loaded {
    GraphDocument doc;
    DualGraph graph;
};

Loaded load(const std::string& path) {
    try {
        Loaded out{read_document(path), {}};
        out.graph = out.doc.to_graph();
        return out;
    } catch (const ParseError& e) {
        throw Exit{exit_parse, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                   e.message()};
    } catch (const Error& e) {
        throw Exit{exit_parse, path + ": " + e.what()};
    }
}

void require_valid(const DualGraph& g) {
    const ValidationReport report = validate(g);
    if (report.ok()) return;
    std::string message = "invalid graph:";
    for (const auto& f : report.failures) message += "\n  " + f;
    throw Exit{exit_invalid, message};
}

std::size_t vertex_index(const DualGraph& g, const std::string& id) {
    auto found = g.find(id);
    if (!found) throw Exit{exit_invalid, "unknown vertex '" + id + "'"};
    return *found;
}

Json divisor_json(const DualGraph& g, const Divisor& d) {
    Json j = Json::object();
    for (const auto& [point, c] : d.terms()) j[point.label(g)] = integer_to_json(c);
    return j;
}

template <typename T, typename F>
Json per_vertex_json(const DualGraph& g, const std::vector<T>& values, F convert) {
    Json j = Json::object();
    for (std::size_t v = 0; v < g.size(); ++v) j[g.vertex(v).id] = convert(values[v]);
    return j;
}

template <typename T>
std::string tuple_text(const std::vector<T>& values) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ")";
    return os.str();
}

// "v0 1  v1 4/3  v2 3/2"
template <typename T>
std::string pairs_text(const DualGraph& g, const std::vector<T>& values) {
    std::ostringstream os;
    for (std::size_t v = 0; v < g.size(); ++v) os << (v ? "  " : "") << g.vertex(v).id << " " << values[v];
    return os.str();
}

Metric parse_metric(const std::string& name) { return name == "lcm" ? Metric::lcm : Metric::skeletal; }

void cmd_check(const Options& opt, std::ostream& out, int& code) {
    const Loaded in = load(opt.file);
    const ValidationReport r = validate(in.graph);
    code = r.ok() ? exit_ok : exit_invalid;
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["vertices"] = in.graph.size();
        j["edges"] = in.graph.edges().size();
        j["connected"] = r.connected;
        j["loop_free"] = r.loop_free;
        j["negative_definite"] = r.negative_definite;
        j["l_node"] = r.has_l_node;
        j["failures"] = r.failures;
        j["ok"] = r.ok();
        out << j.dump() << "\n";
        return;
    }
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "graph: " << in.doc.name << "\n"
        << "vertices: " << in.graph.size() << "\n"
        << "edges: " << in.graph.edges().size() << "\n"
        << "connected: " << yes(r.connected) << "\n"
        << "loop-free: " << yes(r.loop_free) << "\n"
        << "negative-definite: " << yes(r.negative_definite) << "\n"
        << "l-node: " << yes(r.has_l_node) << "\n";
    for (const auto& f : r.failures) out << "failure: " << f << "\n";
    out << "status: " << (r.ok() ? "ok" : "invalid") << "\n";
}

void cmd_multiplicities(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const IntegerVector m = solve_multiplicities(in.graph);
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["multiplicities"] = per_vertex_json(in.graph, m, integer_to_json);
        out << j.dump() << "\n";
        return;
    }
    out << pairs_text(in.graph, m) << "\n";
}

void cmd_rates(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const InvariantBundle b = solve_inner_rates(in.graph);
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["multiplicities"] = per_vertex_json(in.graph, b.m, integer_to_json);
        j["rates"] = per_vertex_json(in.graph, b.q, rational_to_json);
        j["a"] = per_vertex_json(in.graph, b.a, rational_to_json);
        j["warnings"] = Json::array();
        for (const auto& w : b.warnings) j["warnings"].push_back(w.message);
        j["admissible"] = b.admissible();
        out << j.dump() << "\n";
        return;
    }
    out << pairs_text(in.graph, b.q) << "\n"
        << "m: " << pairs_text(in.graph, b.m) << "\n"
        << "a: " << pairs_text(in.graph, b.a) << "\n";
    for (const auto& w : b.warnings) out << "warning: " << w.message << "\n";
    out << "admissible: " << (b.admissible() ? "yes" : "no") << "\n";
}

void cmd_laplacian(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const DualGraph& g = in.graph;
    const InvariantBundle b = solve_inner_rates(g);
    const TheoremCheck t = check_theorem_main(g, b);
    const Divisor two_l = Integer(2) * b.l_div;
    const bool have_laplacian = t.laplacian_defined;
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["laplacian"] = have_laplacian ? divisor_json(g, t.laplacian) : Json(nullptr);
        j["K"] = divisor_json(g, b.k_div);
        j["2L"] = divisor_json(g, two_l);
        j["P"] = divisor_json(g, b.p_div);
        j["K+2L-P"] = divisor_json(g, t.expected);
        j["formula"] = divisor_json(g, t.formula);
        j["holds"] = t.holds;
        j["discrepancies"] = t.discrepancies;
        out << j.dump() << "\n";
        return;
    }
    out << "graph: " << in.doc.name << "\n"
        << "laplacian: " << (have_laplacian ? t.laplacian.str(g) : "undefined") << "\n"
        << "K: " << b.k_div.str(g) << "\n"
        << "2L: " << two_l.str(g) << "\n"
        << "P: " << b.p_div.str(g) << "\n"
        << "K+2L-P: " << t.expected.str(g) << "\n"
        << "formula: " << t.formula.str(g) << "\n";
    for (const auto& d : t.discrepancies) out << "discrepancy: " << d << "\n";
    out << "theorem: " << (t.holds ? "holds" : "fails") << "\n";
}

void cmd_le_greuel(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const IntegerVector m = solve_multiplicities(in.graph);
    const LeGreuelCheck c = le_greuel_check(in.graph, m);
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["m_X"] = integer_to_json(c.m_x);
        j["m_Pi"] = integer_to_json(c.m_pi);
        j["chi_F"] = integer_to_json(c.chi_f);
        j["holds"] = c.holds;
        out << j.dump() << "\n";
        return;
    }
    out << "graph: " << in.doc.name << "\n"
        << "m(X): " << c.m_x << "\n"
        << "m(Pi): " << c.m_pi << "\n"
        << "chi(F): " << c.chi_f << "\n"
        << "balance: " << (c.holds ? "holds" : "fails") << "\n";
}

void cmd_blowup(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const DualGraph& g = in.graph;
    const InvariantBundle b = solve_inner_rates(g);
    BlowupResult r;
    if (!opt.edge_ends.empty()) {
        if (opt.transfer_l != 0 || opt.transfer_p != 0) {
            throw Exit{exit_parse, "--transfer-l/--transfer-p only apply to --vertex"};
        }
        const std::size_t a = vertex_index(g, opt.edge_ends[0]);
        const std::size_t c = vertex_index(g, opt.edge_ends[1]);
        auto e = g.find_edge(a, c);
        if (!e) throw Exit{exit_invalid, "no edge joins '" + opt.edge_ends[0] + "' and '" + opt.edge_ends[1] + "'"};
        r = blowup_edge(g, b.m, b.q, *e);
    } else if (!opt.vertex.empty()) {
        r = blowup_smooth(g, b.m, b.q, vertex_index(g, opt.vertex), opt.transfer_l, opt.transfer_p);
    } else {
        throw Exit{exit_parse, "blowup needs --edge A B or --vertex V"};
    }
    const GraphDocument doc = GraphDocument::from_graph(in.doc.name, r.graph, r.m, r.q);
    if (opt.json) {
        out << document_to_json(doc).dump() << "\n";
    } else {
        out << serialize(doc);
    }
}

void cmd_contact(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const DualGraph& g = in.graph;
    const InvariantBundle b = solve_inner_rates(g);
    const ContactResult c = inner_contact(g, b.q, vertex_index(g, opt.contact_a), vertex_index(g, opt.contact_b));
    std::vector<std::string> path;
    for (const auto& p : c.witness_path) path.push_back(p.label(g));
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["exponent"] = rational_to_json(c.exponent);
        j["path"] = path;
        j["paths"] = c.all_paths_count;
        out << j.dump() << "\n";
        return;
    }
    out << "exponent: " << c.exponent << "\n" << "path:";
    for (const auto& id : path) out << " " << id;
    out << "\n" << "paths: " << c.all_paths_count << "\n";
}

void cmd_enumerate(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    const DualGraph& g = in.graph;
    // P decorations are ignored, so only the structural checks apply.
    ValidationReport report = validate(g);
    if (!report.connected || !report.loop_free || !report.negative_definite) require_valid(g);
    EnumerateOptions options;
    options.strict_rates = !opt.lenient;
    options.threads = std::max(1u, opt.threads);
    EnumerationResult r;
    try {
        r = enumerate_admissible(g, options);
    } catch (const NoLNodes& e) {
        throw Exit{exit_invalid, e.what()};
    }
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["multiplicities"] = per_vertex_json(g, r.m, integer_to_json);
        j["total_polar_weight"] = integer_to_json(r.total_weight);
        j["candidates"] = r.candidates;
        j["configs"] = Json::array();
        for (const auto& c : r.configs) {
            Json cj = Json::object();
            cj["p"] = per_vertex_json(g, c.p, [](int x) { return Json(x); });
            cj["q"] = per_vertex_json(g, c.q, rational_to_json);
            cj["a"] = per_vertex_json(g, c.a, integer_to_json);
            j["configs"].push_back(std::move(cj));
        }
        if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
        out << j.dump() << "\n";
        return;
    }
    out << "graph: " << in.doc.name << "\n" << "vertices:";
    for (const auto& v : g.vertices()) out << " " << v.id;
    out << "\n" << "multiplicities: " << tuple_text(r.m) << "\n"
        << "total-polar-weight: " << r.total_weight << "\n"
        << "candidates: " << r.candidates << "\n"
        << "configs: " << r.configs.size() << "\n";
    for (std::size_t i = 0; i < r.configs.size(); ++i) {
        const auto& c = r.configs[i];
        out << "config " << i + 1 << ": p=" << tuple_text(c.p) << " q=" << tuple_text(c.q) << " a=" << tuple_text(c.a)
            << "\n";
    }
    if (!r.diagnostic.empty()) out << "diagnostic: " << r.diagnostic << "\n";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

void cmd_export_dot(const Options& opt, std::ostream& out) {
    const Loaded in = load(opt.file);
    require_valid(in.graph);
    const DualGraph& g = in.graph;
    const InvariantBundle b = solve_inner_rates(g);
    const auto lengths = edge_lengths(g, b.m, parse_metric(opt.metric));
    std::ostringstream dot;
    dot << "graph \"" << dot_escape(in.doc.name) << "\" {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        const std::string id = dot_escape(g.vertex(v).id);
        dot << "  \"" << id << "\" [label=\"" << id << "\\nm=" << b.m[v] << ",q=" << b.q[v] << "\"];\n";
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edge(e);
        dot << "  \"" << dot_escape(g.vertex(edge.a).id) << "\" -- \"" << dot_escape(g.vertex(edge.b).id)
            << "\" [label=\"len=" << lengths[e] << "\"];\n";
    }
    dot << "}\n";
    if (opt.json) {
        Json j = Json::object();
        j["graph"] = in.doc.name;
        j["metric"] = opt.metric;
        j["dot"] = dot.str();
        out << j.dump() << "\n";
        return;
    }
    out << dot.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Inner rates, Laplacians and polar configurations of surface singularity resolution graphs",
                 "inner-rates"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.add_option("--metric", opt.metric, "Edge metric for length output")
        ->check(CLI::IsMember({"skeletal", "lcm"}));

    auto file_command = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.file, "Graph file")->required();
        return sub;
    };
    CLI::App* check = file_command("check", "Validation report");
    CLI::App* mult = file_command("multiplicities", "Multiplicities of a generic linear form");
    CLI::App* rates = file_command("rates", "Inner rates, a = m q, admissibility warnings");
    CLI::App* lap = file_command("laplacian", "Laplacian of the rates against K + 2L - P");
    CLI::App* lg = file_command("le-greuel", "Polar multiplicity balance");
    CLI::App* blow = file_command("blowup", "Blow up a vertex or an edge and print the new graph");
    auto* edge_opt = blow->add_option("--edge", opt.edge_ends, "Blow up the double point of edge A B")->expected(2);
    auto* vertex_opt = blow->add_option("--vertex", opt.vertex, "Blow up a smooth point of V");
    edge_opt->excludes(vertex_opt);
    blow->add_option("--transfer-l", opt.transfer_l, "L weight moved to the new vertex")->check(CLI::NonNegativeNumber);
    blow->add_option("--transfer-p", opt.transfer_p, "P weight moved to the new vertex")->check(CLI::NonNegativeNumber);
    CLI::App* contact = file_command("contact", "Inner contact between two vertices");
    contact->add_option("a", opt.contact_a, "First vertex")->required();
    contact->add_option("b", opt.contact_b, "Second vertex")->required();
    CLI::App* enumerate = file_command("enumerate-polar", "All admissible polar configurations (ignores P)");
    enumerate->add_flag("--lenient", opt.lenient, "Allow q = 1 away from the L-nodes");
    enumerate->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
    CLI::App* dot = file_command("export-dot", "Graphviz rendering with m, q and edge lengths");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    int code = exit_ok;
    std::ostringstream buffer;
    try {
        if (*check) cmd_check(opt, buffer, code);
        else if (*mult) cmd_multiplicities(opt, buffer);
        else if (*rates) cmd_rates(opt, buffer);
        else if (*lap) cmd_laplacian(opt, buffer);
        else if (*lg) cmd_le_greuel(opt, buffer);
        else if (*blow) cmd_blowup(opt, buffer);
        else if (*contact) cmd_contact(opt, buffer);
        else if (*enumerate) cmd_enumerate(opt, buffer);
        else if (*dot) cmd_export_dot(opt, buffer);
    } catch (const Exit& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    out << buffer.str();
    return code;
}

}  // namespace inner_rates

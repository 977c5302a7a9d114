#include "inner_rates/document.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace inner_rates {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_int(const Token& tok, std::string_view value, int column, bool allow_negative) {
    std::size_t i = 0;
    bool negative = false;
    if (!value.empty() && (value[0] == '-' || value[0] == '+')) {
        negative = value[0] == '-';
        i = 1;
    }
    if (i == value.size()) throw ParseError(0, column, "expected an integer in '" + std::string(tok.text) + "'");
    long long out = 0;
    for (; i < value.size(); ++i) {
        if (value[i] < '0' || value[i] > '9') {
            throw ParseError(0, column, "expected an integer in '" + std::string(tok.text) + "'");
        }
        if (out > (std::numeric_limits<long long>::max() - 9) / 10) {
            throw ParseError(0, column, "integer out of range in '" + std::string(tok.text) + "'");
        }
        out = out * 10 + (value[i] - '0');
    }
    if (negative && !allow_negative && out != 0) {
        throw ParseError(0, column, "expected a nonnegative integer in '" + std::string(tok.text) + "'");
    }
    return negative ? -out : out;
}

int parse_small_uint(const Token& tok, std::string_view value, int column) {
    const long long v = parse_int(tok, value, column, false);
    if (v > std::numeric_limits<int>::max()) throw ParseError(0, column, "value too large in '" + std::string(tok.text) + "'");
    return static_cast<int>(v);
}

class Parser {
public:
    GraphDocument run(std::string_view text) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            line_ = line_no;
            const auto tokens = tokenize(text.substr(pos, end - pos));
            if (!tokens.empty()) handle(tokens);
            if (end == text.size()) break;
            pos = end + 1;
        }
        if (!have_header_) throw ParseError(1, 1, "missing 'graph' header");
        if (doc_.vertices.empty()) throw ParseError(line_, 1, "graph has no vertices");
        return std::move(doc_);
    }

private:
    [[noreturn]] void fail(int column, const std::string& message) const { throw ParseError(line_, column, message); }

    void handle(const std::vector<Token>& tokens) {
        const Token& head = tokens[0];
        try {
            if (head.text == "graph") {
                header(tokens);
            } else if (!have_header_) {
                fail(head.column, "missing 'graph' header");
            } else if (head.text == "vertex") {
                vertex(tokens);
            } else if (head.text == "edge") {
                edge(tokens);
            } else {
                fail(head.column, "unknown record '" + std::string(head.text) + "'");
            }
        } catch (const ParseError& e) {
            if (e.line() == 0) throw ParseError(line_, e.column(), e.message());
            throw;
        }
    }

    void header(const std::vector<Token>& tokens) {
        if (have_header_) fail(tokens[0].column, "duplicate 'graph' header");
        if (tokens.size() != 2) fail(tokens[0].column, "expected 'graph <name>'");
        doc_.name = std::string(tokens[1].text);
        have_header_ = true;
    }

    void vertex(const std::vector<Token>& tokens) {
        if (tokens.size() < 2) fail(tokens[0].column, "expected 'vertex <id> selfint=<int> ...'");
        VertexRecord rec;
        rec.data.id = std::string(tokens[1].text);
        if (rec.data.id.find('=') != std::string::npos) fail(tokens[1].column, "vertex id may not contain '='");
        if (ids_.contains(rec.data.id)) fail(tokens[1].column, "duplicate vertex id '" + rec.data.id + "'");
        bool have_selfint = false;
        std::set<std::string> seen;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            const Token& tok = tokens[i];
            const auto eq = tok.text.find('=');
            if (eq == std::string_view::npos) fail(tok.column, "expected key=value, got '" + std::string(tok.text) + "'");
            const std::string key(tok.text.substr(0, eq));
            const std::string_view value = tok.text.substr(eq + 1);
            const int value_column = tok.column + static_cast<int>(eq) + 1;
            if (!seen.insert(key).second) fail(tok.column, "duplicate key '" + key + "'");
            if (key == "selfint") {
                rec.data.self_int = parse_int(tok, value, value_column, true);
                have_selfint = true;
            } else if (key == "genus") {
                rec.data.genus = parse_small_uint(tok, value, value_column);
            } else if (key == "L") {
                rec.data.l = parse_small_uint(tok, value, value_column);
            } else if (key == "P") {
                rec.data.p = parse_small_uint(tok, value, value_column);
            } else if (key == "m") {
                rec.m = Integer(parse_int(tok, value, value_column, false));
            } else if (key == "q") {
                try {
                    rec.q = Rational::parse(value);
                } catch (const Error&) {
                    fail(value_column, "expected a rational in '" + std::string(tok.text) + "'");
                }
            } else {
                fail(tok.column, "unknown vertex key '" + key + "'");
            }
        }
        if (!have_selfint) fail(tokens[1].column, "vertex '" + rec.data.id + "' lacks selfint=");
        ids_.insert(rec.data.id);
        doc_.vertices.push_back(std::move(rec));
    }

    void edge(const std::vector<Token>& tokens) {
        if (tokens.size() < 3 || tokens.size() > 4) fail(tokens[0].column, "expected 'edge <idA> <idB> [count=<uint>]'");
        EdgeRecord rec{std::string(tokens[1].text), std::string(tokens[2].text), 1};
        if (!ids_.contains(rec.a)) fail(tokens[1].column, "unknown vertex '" + rec.a + "'");
        if (!ids_.contains(rec.b)) fail(tokens[2].column, "unknown vertex '" + rec.b + "'");
        if (rec.a == rec.b) fail(tokens[2].column, "loop edge");
        if (tokens.size() == 4) {
            const Token& tok = tokens[3];
            if (!tok.text.starts_with("count=")) fail(tok.column, "expected count=<uint>");
            rec.count = parse_small_uint(tok, tok.text.substr(6), tok.column + 6);
            if (rec.count == 0) fail(tok.column + 6, "edge count must be positive");
        }
        doc_.edges.push_back(std::move(rec));
    }

    GraphDocument doc_;
    bool have_header_ = false;
    int line_ = 0;
    std::set<std::string> ids_;
};

}  // namespace

GraphDocument parse_document(std::string_view text) { return Parser().run(text); }

GraphDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

DualGraph GraphDocument::to_graph() const {
    DualGraph g;
    for (const auto& v : vertices) g.add_vertex(v.data);
    for (const auto& e : edges)
        for (int i = 0; i < e.count; ++i) g.add_edge(e.a, e.b);
    return g;
}

GraphDocument GraphDocument::from_graph(std::string name, const DualGraph& g) {
    GraphDocument doc;
    doc.name = std::move(name);
    for (const auto& v : g.vertices()) doc.vertices.push_back({v, std::nullopt, std::nullopt});
    for (const Edge& e : g.edges()) {
        const std::string& a = g.vertex(e.a).id;
        const std::string& b = g.vertex(e.b).id;
        if (!doc.edges.empty() && doc.edges.back().a == a && doc.edges.back().b == b) {
            ++doc.edges.back().count;
        } else {
            doc.edges.push_back({a, b, 1});
        }
    }
    return doc;
}

GraphDocument GraphDocument::from_graph(std::string name, const DualGraph& g, std::span<const Integer> m,
                                        std::span<const Rational> q) {
    GraphDocument doc = from_graph(std::move(name), g);
    for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
        if (v < m.size()) doc.vertices[v].m = m[v];
        if (v < q.size()) doc.vertices[v].q = q[v];
    }
    return doc;
}

std::string serialize(const GraphDocument& doc) {
    std::ostringstream os;
    os << "graph " << doc.name << "\n";
    for (const auto& rec : doc.vertices) {
        const VertexData& v = rec.data;
        os << "vertex " << v.id << " selfint=" << v.self_int;
        if (v.genus != 0) os << " genus=" << v.genus;
        if (v.l != 0) os << " L=" << v.l;
        if (v.p != 0) os << " P=" << v.p;
        if (rec.m) os << " m=" << *rec.m;
        if (rec.q) os << " q=" << *rec.q;
        os << "\n";
    }
    for (const auto& e : doc.edges) {
        os << "edge " << e.a << " " << e.b;
        if (e.count != 1) os << " count=" << e.count;
        os << "\n";
    }
    return os.str();
}

Json integer_to_json(const Integer& i) {
    if (i >= std::numeric_limits<std::int64_t>::min() && i <= std::numeric_limits<std::int64_t>::max()) {
        return Json(static_cast<std::int64_t>(i));
    }
    return Json(i.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error("expected an integer in JSON");
}

Json rational_to_json(const Rational& r) {
    Json j = Json::object();
    j["num"] = integer_to_json(r.numerator());
    j["den"] = integer_to_json(r.denominator());
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw Error("expected {\"num\":..,\"den\":..}");
    return Rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

Json document_to_json(const GraphDocument& doc) {
    Json j = Json::object();
    j["name"] = doc.name;
    j["vertices"] = Json::array();
    for (const auto& rec : doc.vertices) {
        Json v = Json::object();
        v["id"] = rec.data.id;
        v["selfint"] = rec.data.self_int;
        v["genus"] = rec.data.genus;
        v["L"] = rec.data.l;
        v["P"] = rec.data.p;
        if (rec.m) v["m"] = integer_to_json(*rec.m);
        if (rec.q) v["q"] = rational_to_json(*rec.q);
        j["vertices"].push_back(std::move(v));
    }
    j["edges"] = Json::array();
    for (const auto& e : doc.edges) j["edges"].push_back(Json{{"a", e.a}, {"b", e.b}, {"count", e.count}});
    return j;
}

GraphDocument document_from_json(const Json& j) {
    GraphDocument doc;
    try {
        doc.name = j.at("name").get<std::string>();
        for (const auto& v : j.at("vertices")) {
            VertexRecord rec;
            rec.data.id = v.at("id").get<std::string>();
            rec.data.self_int = v.at("selfint").get<long long>();
            rec.data.genus = v.value("genus", 0);
            rec.data.l = v.value("L", 0);
            rec.data.p = v.value("P", 0);
            if (v.contains("m")) rec.m = integer_from_json(v.at("m"));
            if (v.contains("q")) rec.q = rational_from_json(v.at("q"));
            doc.vertices.push_back(std::move(rec));
        }
        for (const auto& e : j.at("edges")) {
            doc.edges.push_back({e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.value("count", 1)});
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed graph JSON: ") + e.what());
    }
    // Re-run the text checks (ids, loops, counts) through the canonical form.
    return parse_document(serialize(doc));
}

}  // namespace inner_rates

#pragma once

#include "inner_rates/graph.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inner_rates {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

struct VertexRecord {
    VertexData data;
    std::optional<Integer> m;   // annotation
    std::optional<Rational> q;  // annotation

    friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

struct EdgeRecord {
    std::string a;
    std::string b;
    int count = 1;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/*
 * Text form of a decorated graph:
 *
 *     graph <name>
 *     vertex <id> selfint=<int> [genus=<uint>] [L=<uint>] [P=<uint>] [m=<uint>] [q=<rational>]
 *     edge <idA> <idB> [count=<uint>]
 *
 * '#' starts a comment, blank lines are ignored. m and q are optional
 * annotations written by `blowup`.
 */
struct GraphDocument {
    std::string name;
    std::vector<VertexRecord> vertices;
    std::vector<EdgeRecord> edges;

    DualGraph to_graph() const;

    /// Edge records group consecutive parallel instances.
    static GraphDocument from_graph(std::string name, const DualGraph& g);
    static GraphDocument from_graph(std::string name, const DualGraph& g, std::span<const Integer> m,
                                    std::span<const Rational> q);

    friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument parse_document(std::string_view text);
GraphDocument read_document(const std::string& path);

/// Canonical text: default-valued keys omitted, count only when > 1.
std::string serialize(const GraphDocument& doc);

using Json = nlohmann::ordered_json;

/// Exact rational as {"num": n, "den": d}.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json integer_to_json(const Integer& i);
Integer integer_from_json(const Json& j);

Json document_to_json(const GraphDocument& doc);
GraphDocument document_from_json(const Json& j);

}  // namespace inner_rates

#pragma once

#include "inner_rates/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace inner_rates {

using IntegerVector = std::vector<Integer>;

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(std::string_view id) : Error("unknown vertex '" + std::string(id) + "'") {}
};

class UnknownEdge : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

/// Decorations of one exceptional curve E_v.
struct VertexData {
    std::string id;
    long long self_int = -1;  // E_v . E_v
    int genus = 0;
    int l = 0;  // intersection multiplicity with the generic hyperplane strict transform
    int p = 0;  // intersection multiplicity with the generic polar strict transform

    friend bool operator==(const VertexData&, const VertexData&) = default;
};

/// One edge instance; parallel edges are separate instances.
struct Edge {
    std::size_t a;
    std::size_t b;

    std::size_t other(std::size_t v) const { return v == a ? b : a; }
    bool touches(std::size_t v) const { return v == a || v == b; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/*
 * Decorated dual resolution graph.
 *
 * Vertices are indexed in declaration order; that index fixes the row of the
 * intersection matrix and the slot in every per-vertex vector. Loops are
 * rejected on insertion. Connectivity and definiteness are checked by
 * validate() rather than on construction.
 */
class DualGraph {
public:
    std::size_t add_vertex(VertexData data);
    std::size_t add_edge(std::string_view a, std::string_view b);
    std::size_t add_edge(std::size_t a, std::size_t b);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<VertexData>& vertices() const { return vertices_; }
    const VertexData& vertex(std::size_t i) const { return vertices_.at(i); }
    VertexData& vertex(std::size_t i) { return vertices_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const;

    std::size_t index_of(std::string_view id) const;
    std::optional<std::size_t> find(std::string_view id) const;

    /// Number of edge instances at v.
    std::size_t valency(std::size_t v) const;
    std::vector<std::size_t> incident_edges(std::size_t v) const;
    std::size_t edge_multiplicity(std::size_t a, std::size_t b) const;

    /// First edge instance joining a and b, if any.
    std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;

    /// Replaces the endpoint `from` of edge e by `to`, keeping its index.
    void reattach_edge(std::size_t e, std::size_t from, std::size_t to);

    friend bool operator==(const DualGraph& a, const DualGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexData> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// M_ii = E_i^2, M_ij = number of edges between v_i and v_j.
RationalMatrix intersection_matrix(const DualGraph& g);

struct ValidationReport {
    bool connected = false;
    bool loop_free = false;
    bool negative_definite = false;
    bool has_l_node = false;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

ValidationReport validate(const DualGraph& g);

bool is_connected(const DualGraph& g);

enum class Metric { skeletal, lcm };

/// Skeletal: 1/(m_v m_v'). lcm: gcd(m_v, m_v')/(m_v m_v').
Rational edge_length(const DualGraph& g, std::span<const Integer> m, std::size_t edge, Metric metric);

std::vector<Rational> edge_lengths(const DualGraph& g, std::span<const Integer> m,
                                   Metric metric = Metric::skeletal);

}  // namespace inner_rates

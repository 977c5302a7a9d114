#pragma once

#include "inner_rates/graph.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>

namespace inner_rates {

class InvalidPoint : public Error {
public:
    using Error::Error;
};

/*
 * A vertex, or a point strictly inside an edge instance.
 *
 * Edge points are stored relative to the endpoint whose id is
 * lexicographically smaller, so the same geometric point reached from
 * either end has one representation.
 */
class PointOnGraph {
public:
    static PointOnGraph at_vertex(std::size_t v);

    /// Throws InvalidPoint unless 0 < offset < length.
    static PointOnGraph on_edge(const DualGraph& g, std::size_t edge, std::size_t from,
                                const Rational& offset, const Rational& length);

    /// Like on_edge, but offsets 0 and length collapse to the endpoints.
    static PointOnGraph along_edge(const DualGraph& g, std::size_t edge, std::size_t from,
                                   const Rational& offset, const Rational& length);

    bool is_vertex() const { return is_vertex_; }
    /// Vertex index; for edge points, the canonical reference endpoint.
    std::size_t vertex() const { return vertex_; }
    std::size_t edge() const { return edge_; }
    const Rational& offset() const { return offset_; }

    /// "v0", or "v0~v1@1/18" for an edge point (edge number appended for
    /// parallel edges).
    std::string label(const DualGraph& g) const;

    friend bool operator==(const PointOnGraph&, const PointOnGraph&) = default;
    friend std::strong_ordering operator<=>(const PointOnGraph& a, const PointOnGraph& b);

private:
    bool is_vertex_ = true;
    std::size_t vertex_ = 0;
    std::size_t edge_ = 0;
    Rational offset_;
};

/// The endpoint of e used as the reference for offsets.
std::size_t canonical_reference(const DualGraph& g, std::size_t edge);

/// Finite integer combination of points; zero coefficients are never stored.
class Divisor {
public:
    using Terms = std::map<PointOnGraph, Integer>;

    Divisor() = default;

    void add(const PointOnGraph& point, const Integer& coefficient);
    void add_vertex(std::size_t v, const Integer& coefficient) { add(PointOnGraph::at_vertex(v), coefficient); }

    Integer coefficient(const PointOnGraph& point) const;
    Integer at_vertex(std::size_t v) const { return coefficient(PointOnGraph::at_vertex(v)); }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Divisor& operator+=(const Divisor& rhs);
    Divisor& operator-=(const Divisor& rhs);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const Integer& k, const Divisor& d);
    friend bool operator==(const Divisor&, const Divisor&) = default;

    /// "2[v0] + 6[v4] - 2[v6]"; "0" when empty.
    std::string str(const DualGraph& g) const;

private:
    Terms terms_;
};

Integer degree(const Divisor& d);

using PointMap = std::function<PointOnGraph(const PointOnGraph&)>;

/// f_* D: each coefficient moves to the image of its point.
Divisor pushforward(const Divisor& d, const PointMap& f);

/// Divisor with the given coefficient at each vertex.
Divisor vertex_divisor(std::span<const Integer> coefficients);

}  // namespace inner_rates

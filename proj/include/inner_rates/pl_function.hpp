#pragma once

#include "inner_rates/divisor.hpp"

#include <map>
#include <vector>

namespace inner_rates {

class NonIntegralSlope : public Error {
public:
    using Error::Error;
};

/*
 * Continuous function on the metric graph: a value at every vertex, linear on
 * each edge except at finitely many interior breakpoints. Breakpoint offsets
 * are measured from the edge's canonical reference endpoint.
 */
class PLFunction {
public:
    explicit PLFunction(std::vector<Rational> vertex_values);

    const std::vector<Rational>& vertex_values() const { return values_; }
    const Rational& at_vertex(std::size_t v) const { return values_.at(v); }

    /// `point` must be an edge point.
    void add_breakpoint(const PointOnGraph& point, Rational value);

    /// Breakpoints of one edge, keyed by canonical offset.
    const std::map<Rational, Rational>& breakpoints(std::size_t edge) const;
    bool has_breakpoints() const;

private:
    std::vector<Rational> values_;
    std::map<std::size_t, std::map<Rational, Rational>> breakpoints_;
};

/// Piecewise-linear profile of F along an edge, from the canonical
/// reference endpoint (offset 0) to the other endpoint (offset = length).
std::vector<std::pair<Rational, Rational>> edge_profile(const DualGraph& g, const PLFunction& f,
                                                        std::size_t edge, const Rational& length);

Rational evaluate(const DualGraph& g, const PLFunction& f, const PointOnGraph& point,
                  std::span<const Rational> lengths);

/// Sum of outgoing slopes at every vertex and breakpoint. Throws
/// NonIntegralSlope when a coefficient is not an integer.
Divisor laplacian(const DualGraph& g, std::span<const Rational> lengths, const PLFunction& f);

/// Same, on the skeletal metric of the multiplicities m.
Divisor laplacian(const DualGraph& g, std::span<const Integer> m, const PLFunction& f);

}  // namespace inner_rates

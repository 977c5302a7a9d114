#include "inner_rates/pl_function.hpp"

namespace inner_rates {

PLFunction::PLFunction(std::vector<Rational> vertex_values) : values_(std::move(vertex_values)) {}

void PLFunction::add_breakpoint(const PointOnGraph& point, Rational value) {
    if (point.is_vertex()) throw InvalidPoint("breakpoints must lie inside an edge");
    breakpoints_[point.edge()][point.offset()] = std::move(value);
}

const std::map<Rational, Rational>& PLFunction::breakpoints(std::size_t edge) const {
    static const std::map<Rational, Rational> none;
    auto it = breakpoints_.find(edge);
    return it == breakpoints_.end() ? none : it->second;
}

bool PLFunction::has_breakpoints() const {
    for (const auto& [edge, points] : breakpoints_)
        if (!points.empty()) return true;
    return false;
}

std::vector<std::pair<Rational, Rational>> edge_profile(const DualGraph& g, const PLFunction& f,
                                                        std::size_t edge, const Rational& length) {
    const std::size_t ref = canonical_reference(g, edge);
    const std::size_t other = g.edge(edge).other(ref);
    if (f.vertex_values().size() != g.size()) throw DimensionMismatch("function has wrong number of vertex values");
    std::vector<std::pair<Rational, Rational>> profile;
    profile.emplace_back(Rational(0), f.at_vertex(ref));
    for (const auto& [offset, value] : f.breakpoints(edge)) {
        if (offset <= Rational(0) || offset >= length) {
            throw InvalidPoint("breakpoint offset " + offset.str() + " lies outside its edge");
        }
        profile.emplace_back(offset, value);
    }
    profile.emplace_back(length, f.at_vertex(other));
    return profile;
}

Rational evaluate(const DualGraph& g, const PLFunction& f, const PointOnGraph& point,
                  std::span<const Rational> lengths) {
    if (point.is_vertex()) return f.at_vertex(point.vertex());
    const auto profile = edge_profile(g, f, point.edge(), lengths[point.edge()]);
    const Rational& t = point.offset();
    for (std::size_t i = 1; i < profile.size(); ++i) {
        const auto& [t0, y0] = profile[i - 1];
        const auto& [t1, y1] = profile[i];
        if (t <= t1) return y0 + (y1 - y0) * (t - t0) / (t1 - t0);
    }
    throw InvalidPoint("point lies beyond the end of its edge");
}

Divisor laplacian(const DualGraph& g, std::span<const Rational> lengths, const PLFunction& f) {
    if (lengths.size() != g.edges().size()) throw DimensionMismatch("edge length vector has wrong size");
    std::map<PointOnGraph, Rational> slopes;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto profile = edge_profile(g, f, e, lengths[e]);
        const std::size_t ref = canonical_reference(g, e);
        auto point_at = [&](std::size_t i) {
            if (i == 0) return PointOnGraph::at_vertex(ref);
            if (i + 1 == profile.size()) return PointOnGraph::at_vertex(g.edge(e).other(ref));
            return PointOnGraph::on_edge(g, e, ref, profile[i].first, lengths[e]);
        };
        for (std::size_t i = 1; i < profile.size(); ++i) {
            Rational slope = (profile[i].second - profile[i - 1].second) / (profile[i].first - profile[i - 1].first);
            slopes[point_at(i - 1)] += slope;
            slopes[point_at(i)] -= slope;
        }
    }
    Divisor out;
    for (const auto& [point, total] : slopes) {
        if (!total.is_integer()) {
            throw NonIntegralSlope("outgoing slopes at " + point.label(g) + " sum to " + total.str());
        }
        out.add(point, total.numerator());
    }
    return out;
}

Divisor laplacian(const DualGraph& g, std::span<const Integer> m, const PLFunction& f) {
    const auto lengths = edge_lengths(g, m, Metric::skeletal);
    return laplacian(g, lengths, f);
}

}  // namespace inner_rates

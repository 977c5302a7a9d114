#include "inner_rates/divisor.hpp"

#include <sstream>

namespace inner_rates {

PointOnGraph PointOnGraph::at_vertex(std::size_t v) {
    PointOnGraph p;
    p.is_vertex_ = true;
    p.vertex_ = v;
    return p;
}

std::size_t canonical_reference(const DualGraph& g, std::size_t edge) {
    const Edge& e = g.edge(edge);
    return g.vertex(e.a).id < g.vertex(e.b).id ? e.a : e.b;
}

PointOnGraph PointOnGraph::on_edge(const DualGraph& g, std::size_t edge, std::size_t from,
                                   const Rational& offset, const Rational& length) {
    const Edge& e = g.edge(edge);
    if (!e.touches(from)) throw InvalidPoint("reference vertex is not an endpoint of the edge");
    if (offset <= Rational(0) || offset >= length) {
        throw InvalidPoint("edge offset " + offset.str() + " is not strictly inside (0, " + length.str() + ")");
    }
    PointOnGraph p;
    p.is_vertex_ = false;
    p.edge_ = edge;
    p.vertex_ = canonical_reference(g, edge);
    p.offset_ = p.vertex_ == from ? offset : length - offset;
    return p;
}

PointOnGraph PointOnGraph::along_edge(const DualGraph& g, std::size_t edge, std::size_t from,
                                      const Rational& offset, const Rational& length) {
    const Edge& e = g.edge(edge);
    if (!e.touches(from)) throw InvalidPoint("reference vertex is not an endpoint of the edge");
    if (offset == Rational(0)) return at_vertex(from);
    if (offset == length) return at_vertex(e.other(from));
    return on_edge(g, edge, from, offset, length);
}

std::string PointOnGraph::label(const DualGraph& g) const {
    if (is_vertex_) return g.vertex(vertex_).id;
    const Edge& e = g.edge(edge_);
    const std::size_t other = e.other(vertex_);
    std::string out = g.vertex(vertex_).id + "~" + g.vertex(other).id;
    if (g.edge_multiplicity(e.a, e.b) > 1) out += "#" + std::to_string(edge_);
    return out + "@" + offset_.str();
}

std::strong_ordering operator<=>(const PointOnGraph& a, const PointOnGraph& b) {
    if (a.is_vertex_ != b.is_vertex_) return a.is_vertex_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_vertex_) return a.vertex_ <=> b.vertex_;
    if (auto c = a.edge_ <=> b.edge_; c != 0) return c;
    if (auto c = a.vertex_ <=> b.vertex_; c != 0) return c;
    return a.offset_ <=> b.offset_;
}

void Divisor::add(const PointOnGraph& point, const Integer& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(point, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer Divisor::coefficient(const PointOnGraph& point) const {
    auto it = terms_.find(point);
    return it == terms_.end() ? Integer(0) : it->second;
}

Divisor& Divisor::operator+=(const Divisor& rhs) {
    for (const auto& [point, c] : rhs.terms_) add(point, c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& rhs) {
    for (const auto& [point, c] : rhs.terms_) add(point, -c);
    return *this;
}

Divisor operator*(const Integer& k, const Divisor& d) {
    Divisor out;
    for (const auto& [point, c] : d.terms_) out.add(point, k * c);
    return out;
}

std::string Divisor::str(const DualGraph& g) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [point, c] : terms_) {
        Integer magnitude = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (magnitude != 1) os << magnitude;
        os << "[" << point.label(g) << "]";
        first = false;
    }
    return os.str();
}

Integer degree(const Divisor& d) {
    Integer total = 0;
    for (const auto& [point, c] : d.terms()) total += c;
    return total;
}

Divisor pushforward(const Divisor& d, const PointMap& f) {
    Divisor out;
    for (const auto& [point, c] : d.terms()) out.add(f(point), c);
    return out;
}

Divisor vertex_divisor(std::span<const Integer> coefficients) {
    Divisor out;
    for (std::size_t v = 0; v < coefficients.size(); ++v) out.add_vertex(v, coefficients[v]);
    return out;
}

}  // namespace inner_rates

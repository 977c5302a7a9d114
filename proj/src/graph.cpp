#include "inner_rates/graph.hpp"

#include <algorithm>

namespace inner_rates {

std::size_t DualGraph::add_vertex(VertexData data) {
    if (data.id.empty()) throw InvalidGraph("vertex id must be non-empty");
    if (data.genus < 0 || data.l < 0 || data.p < 0) {
        throw InvalidGraph("vertex '" + data.id + "': genus, L and P must be nonnegative");
    }
    if (index_.contains(data.id)) throw InvalidGraph("duplicate vertex id '" + data.id + "'");
    const std::size_t idx = vertices_.size();
    index_.emplace(data.id, idx);
    vertices_.push_back(std::move(data));
    return idx;
}

std::size_t DualGraph::add_edge(std::string_view a, std::string_view b) {
    return add_edge(index_of(a), index_of(b));
}

std::size_t DualGraph::add_edge(std::size_t a, std::size_t b) {
    if (a >= size() || b >= size()) throw InvalidGraph("edge endpoint out of range");
    if (a == b) throw InvalidGraph("loop edge at '" + vertices_[a].id + "'");
    edges_.push_back({a, b});
    return edges_.size() - 1;
}

const Edge& DualGraph::edge(std::size_t e) const {
    if (e >= edges_.size()) throw UnknownEdge("unknown edge #" + std::to_string(e));
    return edges_[e];
}

std::size_t DualGraph::index_of(std::string_view id) const {
    auto found = find(id);
    if (!found) throw UnknownVertex(id);
    return *found;
}

std::optional<std::size_t> DualGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t DualGraph::valency(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<std::size_t> DualGraph::incident_edges(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].touches(v)) out.push_back(e);
    return out;
}

std::size_t DualGraph::edge_multiplicity(std::size_t a, std::size_t b) const {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
        return (e.a == a && e.b == b) || (e.a == b && e.b == a);
    }));
}

std::optional<std::size_t> DualGraph::find_edge(std::size_t a, std::size_t b) const {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if ((edges_[e].a == a && edges_[e].b == b) || (edges_[e].a == b && edges_[e].b == a)) return e;
    }
    return std::nullopt;
}

void DualGraph::reattach_edge(std::size_t e, std::size_t from, std::size_t to) {
    if (e >= edges_.size()) throw UnknownEdge("unknown edge #" + std::to_string(e));
    Edge& edge = edges_[e];
    if (edge.a == from) {
        edge.a = to;
    } else if (edge.b == from) {
        edge.b = to;
    } else {
        throw InvalidGraph("edge does not touch the vertex being detached");
    }
    if (edge.a == edge.b) throw InvalidGraph("reattachment would create a loop");
}

RationalMatrix intersection_matrix(const DualGraph& g) {
    const std::size_t n = g.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(g.vertex(i).self_int);
    for (const Edge& e : g.edges()) {
        if (e.a == e.b) continue;
        m.at(e.a, e.b) += 1;
        m.at(e.b, e.a) += 1;
    }
    return m;
}

bool is_connected(const DualGraph& g) {
    if (g.size() == 0) return false;
    std::vector<std::vector<std::size_t>> adjacency(g.size());
    for (const Edge& e : g.edges()) {
        adjacency[e.a].push_back(e.b);
        adjacency[e.b].push_back(e.a);
    }
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.size();
}

ValidationReport validate(const DualGraph& g) {
    ValidationReport report;
    report.connected = is_connected(g);
    if (!report.connected) report.failures.push_back(g.size() == 0 ? "graph is empty" : "graph is not connected");

    report.loop_free = std::none_of(g.edges().begin(), g.edges().end(),
                                    [](const Edge& e) { return e.a == e.b; });
    if (!report.loop_free) report.failures.push_back("graph has a loop edge");

    if (g.size() > 0) {
        report.negative_definite = is_negative_definite(intersection_matrix(g));
    }
    if (!report.negative_definite) report.failures.push_back("intersection matrix is not negative definite");

    report.has_l_node = std::any_of(g.vertices().begin(), g.vertices().end(),
                                    [](const VertexData& v) { return v.l > 0; });
    if (!report.has_l_node) report.failures.push_back("no vertex carries L > 0");
    return report;
}

Rational edge_length(const DualGraph& g, std::span<const Integer> m, std::size_t edge, Metric metric) {
    const Edge& e = g.edge(edge);
    if (m.size() != g.size()) throw DimensionMismatch("multiplicity vector has wrong length");
    const Integer& ma = m[e.a];
    const Integer& mb = m[e.b];
    if (ma <= 0 || mb <= 0) throw Error("edge lengths need positive multiplicities");
    if (metric == Metric::skeletal) return Rational(Integer(1), ma * mb);
    return Rational(boost::multiprecision::gcd(ma, mb), ma * mb);
}

std::vector<Rational> edge_lengths(const DualGraph& g, std::span<const Integer> m, Metric metric) {
    std::vector<Rational> out;
    out.reserve(g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) out.push_back(edge_length(g, m, e, metric));
    return out;
}

}  // namespace inner_rates

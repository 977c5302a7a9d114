#include "inner_rates/modification.hpp"

#include <memory>

namespace inner_rates {

std::string fresh_vertex_id(const DualGraph& g) {
    for (std::size_t k = 1;; ++k) {
        std::string id = "w" + std::to_string(k);
        if (!g.find(id)) return id;
    }
}

namespace {

void check_sizes(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q) {
    if (m.size() != g.size() || q.size() != g.size()) {
        throw DimensionMismatch("m and q must have one entry per vertex");
    }
}

}  // namespace

BlowupResult identity_modification(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q) {
    check_sizes(g, m, q);
    return BlowupResult{g, IntegerVector(m.begin(), m.end()), std::vector<Rational>(q.begin(), q.end()),
                        std::nullopt, [](const PointOnGraph& p) { return p; }};
}

BlowupResult blowup_smooth(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q,
                           std::size_t v, int transfer_l, int transfer_p, std::optional<std::string> new_id) {
    check_sizes(g, m, q);
    const VertexData& base = g.vertex(v);
    if (transfer_l < 0 || transfer_p < 0) throw InvalidTransfer("transfer amounts must be nonnegative");
    if (transfer_l > base.l) {
        throw InvalidTransfer("cannot move L=" + std::to_string(transfer_l) + " off '" + base.id + "' (has " +
                              std::to_string(base.l) + ")");
    }
    if (transfer_p > base.p) {
        throw InvalidTransfer("cannot move P=" + std::to_string(transfer_p) + " off '" + base.id + "' (has " +
                              std::to_string(base.p) + ")");
    }

    BlowupResult out;
    out.graph = g;
    VertexData& old_vertex = out.graph.vertex(v);
    old_vertex.self_int -= 1;
    old_vertex.l -= transfer_l;
    old_vertex.p -= transfer_p;
    const std::size_t w = out.graph.add_vertex(
        {new_id.value_or(fresh_vertex_id(g)), -1, 0, transfer_l, transfer_p});
    const std::size_t new_edge = out.graph.add_edge(v, w);
    out.new_vertex = w;

    out.m.assign(m.begin(), m.end());
    out.q.assign(q.begin(), q.end());
    const Integer m_w = m[v] + transfer_l;
    const Rational a_w = q[v] * Rational(m[v]) + Rational(1 - transfer_l + transfer_p);
    out.m.push_back(m_w);
    out.q.push_back(a_w / Rational(m_w));

    out.retraction = [v, w, new_edge](const PointOnGraph& p) {
        if (p.is_vertex()) return p.vertex() == w ? PointOnGraph::at_vertex(v) : p;
        if (p.edge() == new_edge) return PointOnGraph::at_vertex(v);
        return p;
    };
    return out;
}

BlowupResult blowup_edge(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q,
                         std::size_t edge, std::optional<std::string> new_id) {
    check_sizes(g, m, q);
    const Edge e = g.edge(edge);
    const std::size_t v = e.a;
    const std::size_t v2 = e.b;

    BlowupResult out;
    out.graph = g;
    out.graph.vertex(v).self_int -= 1;
    out.graph.vertex(v2).self_int -= 1;
    const std::size_t w = out.graph.add_vertex({new_id.value_or(fresh_vertex_id(g)), -1, 0, 0, 0});
    out.graph.reattach_edge(edge, v2, w);
    const std::size_t second = out.graph.add_edge(w, v2);
    out.new_vertex = w;

    out.m.assign(m.begin(), m.end());
    out.q.assign(q.begin(), q.end());
    const Integer m_w = m[v] + m[v2];
    const Rational a_w = q[v] * Rational(m[v]) + q[v2] * Rational(m[v2]);
    out.m.push_back(m_w);
    out.q.push_back(a_w / Rational(m_w));

    // Both halves map isometrically onto the old edge, measured from v.
    const Rational old_length(Integer(1), m[v] * m[v2]);
    const Rational first_half(Integer(1), m[v] * m_w);
    auto old_graph = std::make_shared<const DualGraph>(g);
    out.retraction = [=](const PointOnGraph& p) {
        auto old_point = [&](const Rational& from_v) {
            return PointOnGraph::along_edge(*old_graph, edge, v, from_v, old_length);
        };
        if (p.is_vertex()) return p.vertex() == w ? old_point(first_half) : p;
        if (p.edge() == edge) {
            // New edge [v, w].
            const Rational from_v = p.vertex() == v ? p.offset() : first_half - p.offset();
            return old_point(from_v);
        }
        if (p.edge() == second) {
            const Rational second_half = old_length - first_half;
            const Rational from_w = p.vertex() == w ? p.offset() : second_half - p.offset();
            return old_point(first_half + from_w);
        }
        return p;
    };
    return out;
}

PushforwardCheck check_pushforward_invariance(const BlowupResult& before, const BlowupResult& after,
                                              const PLFunction& f_before, const PLFunction& f_after) {
    PushforwardCheck check;
    const DualGraph& g0 = before.graph;
    const DualGraph& g1 = after.graph;

    check.restriction_ok = f_before.vertex_values().size() == g0.size() &&
                           f_after.vertex_values().size() == g1.size();
    if (check.restriction_ok) {
        for (std::size_t v = 0; v < g0.size(); ++v) {
            const PointOnGraph image = after.retraction(PointOnGraph::at_vertex(v));
            if (image != PointOnGraph::at_vertex(v) || f_after.at_vertex(v) != f_before.at_vertex(v)) {
                check.restriction_ok = false;
                check.messages.push_back("function after blowup does not restrict to the original at '" +
                                         g0.vertex(v).id + "'");
                break;
            }
        }
    } else {
        check.messages.push_back("function sizes do not match the graphs");
    }

    try {
        const Divisor lap_before = laplacian(g0, std::span<const Integer>(before.m), f_before);
        const Divisor lap_after = laplacian(g1, std::span<const Integer>(after.m), f_after);
        const Divisor pushed = pushforward(lap_after, after.retraction);
        check.laplacian_ok = pushed == lap_before;
        if (!check.laplacian_ok) {
            check.messages.push_back("r_* laplacian = " + pushed.str(g0) + " but laplacian = " + lap_before.str(g0));
        }
    } catch (const NonIntegralSlope& e) {
        check.messages.push_back(e.what());
    }

    const Divisor k_before = canonical_vector(g0, before.m).divisor;
    const Divisor k_pushed = pushforward(canonical_vector(g1, after.m).divisor, after.retraction);
    check.canonical_ok = k_pushed == k_before;
    if (!check.canonical_ok) {
        check.messages.push_back("r_* K = " + k_pushed.str(g0) + " but K = " + k_before.str(g0));
    }

    check.holds = check.restriction_ok && check.laplacian_ok && check.canonical_ok;
    return check;
}

}  // namespace inner_rates

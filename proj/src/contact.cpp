#include "inner_rates/contact.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace inner_rates {

namespace {

// Neighbour lists sorted ascending, with the best (largest) segment minimum
// among parallel links.
using LinkTable = std::vector<std::map<std::size_t, Rational>>;

void add_link(LinkTable& links, std::size_t u, std::size_t w, const Rational& segment_min) {
    auto put = [&](std::size_t from, std::size_t to) {
        auto [it, inserted] = links[from].try_emplace(to, segment_min);
        if (!inserted && it->second < segment_min) it->second = segment_min;
    };
    put(u, w);
    put(w, u);
}

// Depth-first enumeration of simple paths; neighbours are visited in
// ascending order so paths come out lexicographically sorted.
void for_each_simple_path(const LinkTable& links, std::size_t from, std::size_t to,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> path{from};
    std::vector<bool> on_path(links.size(), false);
    on_path[from] = true;
    std::function<void(std::size_t)> extend = [&](std::size_t node) {
        if (node == to) {
            visit(path);
            return;
        }
        for (const auto& [next, unused] : links[node]) {
            if (on_path[next]) continue;
            on_path[next] = true;
            path.push_back(next);
            extend(next);
            path.pop_back();
            on_path[next] = false;
        }
    };
    extend(from);
}

Rational value_at(const std::vector<std::pair<Rational, Rational>>& profile, const Rational& t) {
    for (std::size_t i = 1; i < profile.size(); ++i) {
        const auto& [t0, y0] = profile[i - 1];
        const auto& [t1, y1] = profile[i];
        if (t <= t1) return y0 + (y1 - y0) * (t - t0) / (t1 - t0);
    }
    return profile.back().second;
}

Rational segment_min(const std::vector<std::pair<Rational, Rational>>& profile, const Rational& lo,
                     const Rational& hi) {
    Rational best = std::min(value_at(profile, lo), value_at(profile, hi));
    for (const auto& [t, y] : profile) {
        if (t > lo && t < hi && y < best) best = y;
    }
    return best;
}

}  // namespace

std::vector<VertexPath> injective_paths(const DualGraph& g, std::size_t from, std::size_t to) {
    if (from >= g.size() || to >= g.size()) throw UnknownVertex("#" + std::to_string(std::max(from, to)));
    LinkTable links(g.size());
    for (const Edge& e : g.edges()) add_link(links, e.a, e.b, Rational(0));
    std::vector<VertexPath> out;
    for_each_simple_path(links, from, to, [&](const std::vector<std::size_t>& p) { out.push_back(p); });
    return out;
}

ContactResult inner_contact(const DualGraph& g, const PLFunction& rates, std::span<const Rational> lengths,
                            const PointOnGraph& x, const PointOnGraph& y) {
    if (lengths.size() != g.edges().size()) throw DimensionMismatch("edge length vector has wrong size");
    if (x == y) return {evaluate(g, rates, x, lengths), {x}, 1};

    const std::size_t n = g.size();
    std::vector<PointOnGraph> nodes;
    for (std::size_t v = 0; v < n; ++v) nodes.push_back(PointOnGraph::at_vertex(v));
    auto node_of = [&](const PointOnGraph& p) {
        if (p.is_vertex()) return p.vertex();
        nodes.push_back(p);
        return nodes.size() - 1;
    };
    const std::size_t source = node_of(x);
    const std::size_t target = node_of(y);

    LinkTable links(nodes.size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto profile = edge_profile(g, rates, e, lengths[e]);
        const std::size_t ref = canonical_reference(g, e);
        const std::size_t other = g.edge(e).other(ref);

        // Interior path nodes on this edge, sorted along it from ref.
        std::vector<std::pair<Rational, std::size_t>> stops{{Rational(0), ref}};
        for (std::size_t node = n; node < nodes.size(); ++node) {
            if (nodes[node].edge() == e) stops.emplace_back(nodes[node].offset(), node);
        }
        stops.emplace_back(lengths[e], other);
        std::sort(stops.begin(), stops.end());
        for (std::size_t i = 1; i < stops.size(); ++i) {
            add_link(links, stops[i - 1].second, stops[i].second,
                     segment_min(profile, stops[i - 1].first, stops[i].first));
        }
    }
    // An edge holding x or y is split at that point, so no path crosses it whole.

    ContactResult result;
    bool have_best = false;
    for_each_simple_path(links, source, target, [&](const std::vector<std::size_t>& path) {
        ++result.all_paths_count;
        Rational value = links[path[0]].at(path[1]);
        for (std::size_t i = 2; i < path.size(); ++i) value = std::min(value, links[path[i - 1]].at(path[i]));
        if (!have_best || value > result.exponent) {
            have_best = true;
            result.exponent = value;
            result.witness_path.clear();
            for (std::size_t node : path) result.witness_path.push_back(nodes[node]);
        }
    });
    if (!have_best) throw InvalidGraph("no path joins the two points; is the graph connected?");
    return result;
}

ContactResult inner_contact(const DualGraph& g, std::span<const Rational> q, std::size_t x, std::size_t y) {
    if (q.size() != g.size()) throw DimensionMismatch("rate vector has wrong length");
    // Lengths do not matter without breakpoints.
    const std::vector<Rational> unit(g.edges().size(), Rational(1));
    return inner_contact(g, PLFunction(std::vector<Rational>(q.begin(), q.end())), unit,
                         PointOnGraph::at_vertex(x), PointOnGraph::at_vertex(y));
}

const Rational& UltrametricExponent::value() const {
    if (!value_) throw Error("ultrametric exponent is infinite");
    return *value_;
}

std::strong_ordering operator<=>(const UltrametricExponent& a, const UltrametricExponent& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
}

UltrametricExponent ultrametric_exponent(const DualGraph& g, const PLFunction& rates,
                                         std::span<const Rational> lengths, const PointOnGraph& x,
                                         const PointOnGraph& y) {
    if (x == y) return UltrametricExponent::infinite();
    return UltrametricExponent::finite(inner_contact(g, rates, lengths, x, y).exponent);
}

UltrametricExponent ultrametric_exponent(const DualGraph& g, std::span<const Rational> q, std::size_t x,
                                         std::size_t y) {
    if (x == y) return UltrametricExponent::infinite();
    return UltrametricExponent::finite(inner_contact(g, q, x, y).exponent);
}

Rational rate_off_skeleton(const DualGraph& g, const PLFunction& rates, std::span<const Rational> lengths,
                           const PointOnGraph& base, const Rational& lcm_distance) {
    if (lcm_distance.sign() < 0) throw Error("distance to the skeleton must be nonnegative");
    return evaluate(g, rates, base, lengths) + lcm_distance;
}

}  // namespace inner_rates

#include "inner_rates/contact.hpp"

#include "inner_rates/modification.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>

using namespace inner_rates;
using inner_rates::test_support::load_fixture;
using inner_rates::test_support::r;

namespace {

// Widest path by Floyd-Warshall on the (max, min) semiring, seeded with
// node-weighted edges min(q_i, q_j).
std::vector<std::vector<std::optional<Rational>>> widest_paths(const DualGraph& g, const std::vector<Rational>& q) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::optional<Rational>>> best(n, std::vector<std::optional<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i) best[i][i] = q[i];
    for (const Edge& e : g.edges()) best[e.a][e.b] = best[e.b][e.a] = std::min(q[e.a], q[e.b]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!best[i][k] || !best[k][j]) continue;
                const Rational through = std::min(*best[i][k], *best[k][j]);
                if (!best[i][j] || *best[i][j] < through) best[i][j] = through;
            }
    return best;
}

DualGraph random_multigraph(std::mt19937& rng, std::size_t n) {
    DualGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex({"n" + std::to_string(v), -8, 0, v == 0 ? 1 : 0, 0});
    for (std::size_t v = 1; v < n; ++v) g.add_edge(v, rng() % v);
    const std::size_t extra = rng() % (n + 1);
    for (std::size_t i = 0; i < extra && n > 1; ++i) {
        const std::size_t a = rng() % n;
        const std::size_t b = rng() % n;
        if (a != b) g.add_edge(a, b);
    }
    return g;
}

DualGraph triangle() {
    DualGraph g;
    g.add_vertex({"a", -3, 0, 1, 0});
    g.add_vertex({"b", -3, 0, 0, 0});
    g.add_vertex({"c", -3, 0, 0, 0});
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "a");
    return g;
}

}  // namespace

TEST(InjectivePaths, Tree) {
    const DualGraph g = load_fixture("e8");
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) EXPECT_EQ(injective_paths(g, a, b).size(), 1u);
    EXPECT_EQ(injective_paths(g, 0, 7), (std::vector<VertexPath>{{0, 1, 2, 3, 4, 7}}));
}

TEST(InjectivePaths, Triangle) {
    EXPECT_EQ(injective_paths(triangle(), 0, 2), (std::vector<VertexPath>{{0, 1, 2}, {0, 2}}));
}

TEST(InjectivePaths, ParallelEdgesDoNotMultiply) {
    DualGraph g;
    g.add_vertex({"a", -3, 0, 1, 0});
    g.add_vertex({"b", -3, 0, 0, 0});
    g.add_edge("a", "b");
    g.add_edge("a", "b");
    EXPECT_EQ(injective_paths(g, 0, 1).size(), 1u);
}

TEST(InnerContact, E8Examples) {
    const DualGraph g = load_fixture("e8");
    const InvariantBundle b = solve_inner_rates(g);
    const ContactResult c = inner_contact(g, b.q, 6, 7);
    EXPECT_EQ(c.exponent, r(5, 3));
    EXPECT_EQ(c.all_paths_count, 1u);
    ASSERT_EQ(c.witness_path.size(), 4u);
    EXPECT_EQ(c.witness_path.front(), PointOnGraph::at_vertex(6));
    EXPECT_EQ(c.witness_path.back(), PointOnGraph::at_vertex(7));
    for (std::size_t v = 1; v < g.size(); ++v) EXPECT_EQ(inner_contact(g, b.q, 0, v).exponent, 1);
    EXPECT_EQ(inner_contact(g, b.q, 4, 4).exponent, r(5, 3));
}

TEST(InnerContact, Symmetric) {
    const DualGraph g = load_fixture("e8");
    const InvariantBundle b = solve_inner_rates(g);
    for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = 0; y < g.size(); ++y)
            EXPECT_EQ(inner_contact(g, b.q, x, y).exponent, inner_contact(g, b.q, y, x).exponent);
}

TEST(InnerContact, WitnessAttainsExponent) {
    const DualGraph g = triangle();
    const std::vector<Rational> q{1, 3, 2};
    const ContactResult c = inner_contact(g, q, 1, 2);
    EXPECT_EQ(c.exponent, 2);
    EXPECT_EQ(c.all_paths_count, 2u);
    Rational least = q[c.witness_path.front().vertex()];
    for (const auto& p : c.witness_path) least = std::min(least, q[p.vertex()]);
    EXPECT_EQ(least, c.exponent);
}

TEST(InnerContact, MatchesWidestPathOracle) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const DualGraph g = random_multigraph(rng, 1 + rng() % 8);
        std::vector<Rational> q;
        for (std::size_t v = 0; v < g.size(); ++v) q.push_back(r(1 + rng() % 12, 1 + rng() % 5));
        const auto oracle = widest_paths(g, q);
        for (std::size_t x = 0; x < g.size(); ++x)
            for (std::size_t y = 0; y < g.size(); ++y) EXPECT_EQ(inner_contact(g, q, x, y).exponent, *oracle[x][y]);
    }
}

TEST(InnerContact, EdgePointsAndBreakpoints) {
    const DualGraph g = load_fixture("e8");
    const InvariantBundle b = solve_inner_rates(g);
    const auto lengths = edge_lengths(g, b.m);
    const PLFunction f(b.q);
    const std::size_t e = *g.find_edge(4, 7);
    const PointOnGraph inside = PointOnGraph::on_edge(g, e, 4, r(1, 36), lengths[e]);
    EXPECT_EQ(inner_contact(g, f, lengths, inside, PointOnGraph::at_vertex(7)).exponent, r(11, 6));
    EXPECT_EQ(inner_contact(g, f, lengths, inside, inside).exponent, r(11, 6));
    EXPECT_EQ(inner_contact(g, f, lengths, inside, PointOnGraph::at_vertex(6)).exponent, r(5, 3));

    PLFunction dipped(b.q);
    dipped.add_breakpoint(PointOnGraph::on_edge(g, e, 4, r(1, 54), lengths[e]), r(3, 2));
    EXPECT_EQ(inner_contact(g, dipped, lengths, PointOnGraph::at_vertex(6), PointOnGraph::at_vertex(7)).exponent,
              r(3, 2));
}

TEST(InnerContact, EdgeMinimumAtEndpointForLinearRates) {
    const DualGraph g = load_fixture("e8");
    const InvariantBundle b = solve_inner_rates(g);
    const auto lengths = edge_lengths(g, b.m);
    const PLFunction f(b.q);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edge(e);
        const Rational endpoint_min = std::min(b.q[edge.a], b.q[edge.b]);
        for (int k = 1; k < 8; ++k) {
            const PointOnGraph p = PointOnGraph::on_edge(g, e, edge.a, lengths[e] * r(k, 8), lengths[e]);
            EXPECT_GE(evaluate(g, f, p, lengths), endpoint_min);
        }
        EXPECT_EQ(inner_contact(g, b.q, edge.a, edge.b).exponent, endpoint_min);
    }
}

TEST(Ultrametric, Examples) {
    const DualGraph g = load_fixture("e8");
    const InvariantBundle b = solve_inner_rates(g);
    EXPECT_TRUE(ultrametric_exponent(g, b.q, 3, 3).is_infinite());
    EXPECT_EQ(ultrametric_exponent(g, b.q, 3, 3).str(), "inf");
    EXPECT_EQ(ultrametric_exponent(g, b.q, 6, 7).value(), r(5, 3));
    EXPECT_GE(ultrametric_exponent(g, b.q, 6, 7),
              std::min(ultrametric_exponent(g, b.q, 6, 0), ultrametric_exponent(g, b.q, 0, 7)));
    EXPECT_GT(UltrametricExponent::infinite(), UltrametricExponent::finite(1000));
    EXPECT_THROW(UltrametricExponent::infinite().value(), Error);
}

TEST(Ultrametric, AllTriplesOnFixtures) {
    for (const auto& name : test_support::fixture_names()) {
        const DualGraph g = load_fixture(name);
        const InvariantBundle b = solve_inner_rates(g);
        for (std::size_t x = 0; x < g.size(); ++x)
            for (std::size_t y = 0; y < g.size(); ++y)
                for (std::size_t z = 0; z < g.size(); ++z)
                    EXPECT_GE(ultrametric_exponent(g, b.q, x, z),
                              std::min(ultrametric_exponent(g, b.q, x, y), ultrametric_exponent(g, b.q, y, z)));
    }
}

TEST(RateOffSkeleton, Examples) {
    const DualGraph g = load_fixture("e8");
    const InvariantBundle b = solve_inner_rates(g);
    const auto lengths = edge_lengths(g, b.m);
    const PLFunction f(b.q);
    EXPECT_EQ(rate_off_skeleton(g, f, lengths, PointOnGraph::at_vertex(0), 0), 1);
    EXPECT_EQ(rate_off_skeleton(g, f, lengths, PointOnGraph::at_vertex(0), r(1, 2)), r(3, 2));
    EXPECT_EQ(rate_off_skeleton(g, f, lengths, PointOnGraph::at_vertex(7), r(1, 3)), r(7, 3));
    EXPECT_THROW(rate_off_skeleton(g, f, lengths, PointOnGraph::at_vertex(7), r(-1, 3)), Error);
}

TEST(RateOffSkeleton, MatchesSmoothBlowup) {
    for (const auto& name : test_support::fixture_names()) {
        const DualGraph g = load_fixture(name);
        const InvariantBundle b = solve_inner_rates(g);
        const auto lengths = edge_lengths(g, b.m);
        for (std::size_t v = 0; v < g.size(); ++v) {
            const BlowupResult blown = blowup_smooth(g, b.m, b.q, v);
            const std::size_t w = *blown.new_vertex;
            const Rational step = edge_length(blown.graph, blown.m, blown.graph.edges().size() - 1, Metric::lcm);
            EXPECT_EQ(rate_off_skeleton(g, PLFunction(b.q), lengths, PointOnGraph::at_vertex(v), step), blown.q[w])
                << name << " " << v;
        }
    }
}

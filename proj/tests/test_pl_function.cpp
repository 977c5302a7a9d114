#include "inner_rates/pl_function.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace inner_rates;
using inner_rates::test_support::ints;
using inner_rates::test_support::r;

namespace {

const std::vector<Rational> e8_rates{1, r(4, 3), r(3, 2), r(8, 5), r(5, 3), r(7, 4), 2, 2};

DualGraph path3() {
    DualGraph g;
    g.add_vertex({"a", -2, 0, 1, 0});
    g.add_vertex({"b", -2, 0, 0, 0});
    g.add_vertex({"c", -2, 0, 0, 0});
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    return g;
}

}  // namespace

TEST(Evaluate, VertexValue) {
    const DualGraph g = test_support::load_fixture("e8");
    const auto lengths = edge_lengths(g, ints({2, 3, 4, 5, 6, 4, 2, 3}));
    EXPECT_EQ(evaluate(g, PLFunction(e8_rates), PointOnGraph::at_vertex(3), lengths), r(8, 5));
}

TEST(Evaluate, E8EdgePoints) {
    const DualGraph g = test_support::load_fixture("e8");
    const auto lengths = edge_lengths(g, ints({2, 3, 4, 5, 6, 4, 2, 3}));
    const PLFunction f(e8_rates);
    EXPECT_EQ(evaluate(g, f, PointOnGraph::on_edge(g, 0, 0, r(1, 12), lengths[0]), lengths), r(7, 6));
    EXPECT_EQ(evaluate(g, f, PointOnGraph::on_edge(g, 0, 0, r(1, 18), lengths[0]), lengths), r(10, 9));
    EXPECT_EQ(evaluate(g, f, PointOnGraph::on_edge(g, 0, 1, r(1, 9), lengths[0]), lengths), r(10, 9));
}

TEST(Evaluate, ContinuousAtVertices) {
    const DualGraph g = test_support::load_fixture("e8");
    const auto lengths = edge_lengths(g, ints({2, 3, 4, 5, 6, 4, 2, 3}));
    PLFunction f(e8_rates);
    f.add_breakpoint(PointOnGraph::on_edge(g, 3, 3, r(1, 60), lengths[3]), 7);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        for (std::size_t end : {g.edge(e).a, g.edge(e).b}) {
            Rational previous_gap;
            for (int k = 1; k <= 4; ++k) {
                const Rational t = lengths[e] / Rational(Integer(1) << (4 * k));
                const Rational value = evaluate(g, f, PointOnGraph::on_edge(g, e, end, t, lengths[e]), lengths);
                const Rational gap = abs(value - f.at_vertex(end));
                if (k > 1) EXPECT_LE(gap, previous_gap);
                previous_gap = gap;
            }
            EXPECT_LT(previous_gap, r(1, 1000));
        }
    }
}

TEST(Evaluate, Breakpoints) {
    const DualGraph g = path3();
    const std::vector<Rational> lengths{1, 1};
    PLFunction f({0, 0, 0});
    f.add_breakpoint(PointOnGraph::on_edge(g, 0, 0, r(1, 2), 1), 3);
    EXPECT_EQ(evaluate(g, f, PointOnGraph::on_edge(g, 0, 0, r(1, 4), 1), lengths), r(3, 2));
    EXPECT_EQ(evaluate(g, f, PointOnGraph::on_edge(g, 0, 1, r(1, 4), 1), lengths), r(3, 2));
    EXPECT_EQ(evaluate(g, f, PointOnGraph::on_edge(g, 0, 0, r(1, 2), 1), lengths), 3);
}

TEST(Laplacian, E8Rates) {
    const DualGraph g = test_support::load_fixture("e8");
    const Divisor d = laplacian(g, ints({2, 3, 4, 5, 6, 4, 2, 3}), PLFunction(e8_rates));
    EXPECT_EQ(d.str(g), "2[v0] + 6[v4] - 2[v6] - 6[v7]");
}

TEST(Laplacian, Constant) {
    const DualGraph g = test_support::load_fixture("e8");
    EXPECT_TRUE(laplacian(g, ints({2, 3, 4, 5, 6, 4, 2, 3}), PLFunction(std::vector<Rational>(8, r(7, 3)))).empty());
}

TEST(Laplacian, PathTent) {
    const DualGraph g = path3();
    const Divisor d = laplacian(g, ints({1, 1, 1}), PLFunction({0, 1, 0}));
    EXPECT_EQ(d.str(g), "[a] - 2[b] + [c]");
}

TEST(Laplacian, InteriorBreakpoint) {
    const DualGraph g = path3();
    PLFunction f({0, 0, 0});
    const PointOnGraph mid = PointOnGraph::on_edge(g, 1, 1, r(1, 2), 1);
    f.add_breakpoint(mid, 1);
    const Divisor d = laplacian(g, ints({1, 1, 1}), f);
    EXPECT_EQ(d.coefficient(mid), -4);
    EXPECT_EQ(d.at_vertex(1), 2);
    EXPECT_EQ(d.at_vertex(2), 2);
    EXPECT_EQ(degree(d), 0);
    EXPECT_EQ(d.str(g), "2[b] + 2[c] - 4[b~c@1/2]");
}

TEST(Laplacian, NonIntegralSlope) {
    const DualGraph g = path3();
    EXPECT_THROW(laplacian(g, ints({1, 1, 1}), PLFunction({0, r(1, 2), 0})), NonIntegralSlope);
}

TEST(Laplacian, BadBreakpointOffset) {
    const DualGraph g = path3();
    PLFunction f({0, 0, 0});
    f.add_breakpoint(PointOnGraph::on_edge(g, 0, 0, r(1, 2), 1), 1);
    const std::vector<Rational> short_lengths{r(1, 3), 1};
    EXPECT_THROW(laplacian(g, short_lengths, f), InvalidPoint);
    EXPECT_THROW(f.add_breakpoint(PointOnGraph::at_vertex(0), 1), InvalidPoint);
}

#include "inner_rates/invariants.hpp"

namespace inner_rates {

namespace {

Integer as_integer(int v) { return Integer(v); }

}  // namespace

IntegerVector solve_multiplicities(const DualGraph& g) {
    RationalVector rhs(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) rhs[v] = Rational(-g.vertex(v).l);
    const RationalVector solution = solve_linear(intersection_matrix(g), rhs);

    IntegerVector m(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Rational& x = solution[v];
        if (!x.is_integer()) {
            throw NonIntegralMultiplicity("multiplicity of '" + g.vertex(v).id + "' solves to " + x.str());
        }
        if (x.sign() <= 0) {
            throw NonPositiveMultiplicity("multiplicity of '" + g.vertex(v).id + "' solves to " + x.str());
        }
        m[v] = x.numerator();
    }
    return m;
}

CanonicalData canonical_vector(const DualGraph& g, std::span<const Integer> m) {
    if (m.size() != g.size()) throw DimensionMismatch("multiplicity vector has wrong length");
    CanonicalData out;
    out.k.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        out.k[v] = Integer(g.valency(v)) + 2 * as_integer(g.vertex(v).genus) - 2;
        out.divisor.add_vertex(v, m[v] * out.k[v]);
    }
    return out;
}

IntegerVector punctured_euler_characteristics(const DualGraph& g) {
    IntegerVector chi(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        chi[v] = 2 - 2 * as_integer(g.vertex(v).genus) - Integer(g.valency(v));
    }
    return chi;
}

std::vector<AdmissibilityWarning> admissibility_warnings(const DualGraph& g, std::span<const Integer> m,
                                                         std::span<const Rational> a, bool strict_rates) {
    std::vector<AdmissibilityWarning> out;
    using Kind = AdmissibilityWarning::Kind;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const std::string& id = g.vertex(v).id;
        const Rational q = a[v] / Rational(m[v]);
        if (!a[v].is_integer()) {
            out.push_back({Kind::non_integral_a, v, "a(" + id + ") = " + a[v].str() + " is not an integer"});
        } else if (a[v].sign() <= 0) {
            out.push_back({Kind::non_positive_a, v, "a(" + id + ") = " + a[v].str() + " is not positive"});
        }
        if (q < Rational(1)) {
            out.push_back({Kind::rate_below_one, v, "q(" + id + ") = " + q.str() + " is below 1"});
        } else if (g.vertex(v).l > 0 && q != Rational(1)) {
            out.push_back({Kind::rate_not_one_at_l_node, v, "q(" + id + ") = " + q.str() + " at an L-node"});
        } else if (strict_rates && g.vertex(v).l == 0 && q == Rational(1)) {
            out.push_back({Kind::rate_one_off_l_node, v, "q(" + id + ") = 1 away from the L-nodes"});
        }
    }
    return out;
}

InvariantBundle solve_inner_rates(const DualGraph& g) { return solve_inner_rates(g, solve_multiplicities(g)); }

InvariantBundle solve_inner_rates(const DualGraph& g, IntegerVector m) {
    if (m.size() != g.size()) throw DimensionMismatch("multiplicity vector has wrong length");
    InvariantBundle b;
    b.m = std::move(m);
    CanonicalData canonical = canonical_vector(g, b.m);
    b.k = std::move(canonical.k);
    b.k_div = std::move(canonical.divisor);
    b.chi = punctured_euler_characteristics(g);

    RationalVector rhs(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const VertexData& vd = g.vertex(v);
        rhs[v] = Rational(b.k[v] + vd.l - vd.p);
        b.l_div.add_vertex(v, b.m[v] * vd.l);
        b.p_div.add_vertex(v, b.m[v] * vd.p);
    }
    b.a = solve_linear(intersection_matrix(g), rhs);
    b.q.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) b.q[v] = b.a[v] / Rational(b.m[v]);
    b.warnings = admissibility_warnings(g, b.m, b.a);
    return b;
}

Divisor laplacian_formula(const DualGraph& g, std::span<const Integer> m) {
    const IntegerVector chi = punctured_euler_characteristics(g);
    Divisor out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const VertexData& vd = g.vertex(v);
        out.add_vertex(v, m[v] * (2 * as_integer(vd.l) - vd.p - chi[v]));
    }
    return out;
}

TheoremCheck check_theorem_main(const DualGraph& g, const InvariantBundle& bundle) {
    TheoremCheck check;
    const CanonicalData canonical = canonical_vector(g, bundle.m);
    Divisor l_div;
    Divisor p_div;
    for (std::size_t v = 0; v < g.size(); ++v) {
        l_div.add_vertex(v, bundle.m[v] * g.vertex(v).l);
        p_div.add_vertex(v, bundle.m[v] * g.vertex(v).p);
    }
    check.expected = canonical.divisor + Integer(2) * l_div - p_div;
    check.formula = laplacian_formula(g, bundle.m);

    try {
        check.laplacian = laplacian(g, std::span<const Integer>(bundle.m), bundle.rates_function());
        check.laplacian_defined = true;
    } catch (const NonIntegralSlope& e) {
        check.discrepancies.push_back(std::string("rates function has non-integral slopes: ") + e.what());
    }
    if (check.laplacian_defined && check.laplacian != check.expected) {
        check.discrepancies.push_back("laplacian " + check.laplacian.str(g) + " differs from K + 2L - P = " +
                                      check.expected.str(g));
    }
    if (check.laplacian_defined && check.laplacian != check.formula) {
        check.discrepancies.push_back("laplacian " + check.laplacian.str(g) + " differs from vertex formula " +
                                      check.formula.str(g));
    }
    check.holds = check.discrepancies.empty();
    return check;
}

Integer milnor_fiber_euler(const DualGraph& g, std::span<const Integer> m) {
    const IntegerVector chi = punctured_euler_characteristics(g);
    Integer total = 0;
    for (std::size_t v = 0; v < g.size(); ++v) total += m[v] * (chi[v] - g.vertex(v).l);
    return total;
}

LeGreuelCheck le_greuel_check(const DualGraph& g, std::span<const Integer> m) {
    LeGreuelCheck out;
    out.m_x = 0;
    out.m_pi = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        out.m_x += m[v] * g.vertex(v).l;
        out.m_pi += m[v] * g.vertex(v).p;
    }
    out.chi_f = milnor_fiber_euler(g, m);
    out.holds = out.m_pi == out.m_x - out.chi_f;
    return out;
}

}  // namespace inner_rates

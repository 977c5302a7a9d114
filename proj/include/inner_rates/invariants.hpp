#pragma once

#include "inner_rates/pl_function.hpp"

#include <string>
#include <vector>

namespace inner_rates {

class NonIntegralMultiplicity : public Error {
public:
    using Error::Error;
};

class NonPositiveMultiplicity : public Error {
public:
    using Error::Error;
};

struct AdmissibilityWarning {
    enum class Kind {
        non_integral_a,     // m_v q_v is not an integer
        non_positive_a,     // m_v q_v <= 0
        rate_below_one,     // q_v < 1
        rate_one_off_l_node,  // q_v = 1 at a vertex with l_v = 0
        rate_not_one_at_l_node,
    };
    Kind kind;
    std::size_t vertex;
    std::string message;
};

/// Everything solved for one decorated graph.
struct InvariantBundle {
    IntegerVector m;
    std::vector<Rational> q;
    std::vector<Rational> a;  // m_v q_v; integral when admissible
    IntegerVector k;          // val(v) + 2g(v) - 2
    IntegerVector chi;        // Euler characteristic of E_v minus its double points
    Divisor k_div;            // m_v k_v
    Divisor l_div;            // m_v l_v
    Divisor p_div;            // m_v p_v
    std::vector<AdmissibilityWarning> warnings;

    bool admissible() const { return warnings.empty(); }
    PLFunction rates_function() const { return PLFunction(q); }
};

/// Solves M m = -l and checks that every m_v is a positive integer.
IntegerVector solve_multiplicities(const DualGraph& g);

struct CanonicalData {
    IntegerVector k;
    Divisor divisor;
};

CanonicalData canonical_vector(const DualGraph& g, std::span<const Integer> m);

/// chi_v = 2 - 2g(v) - val(v), counting parallel edges separately.
IntegerVector punctured_euler_characteristics(const DualGraph& g);

/// m, then a from M a = k + l - p, then q = a / m.
InvariantBundle solve_inner_rates(const DualGraph& g);
InvariantBundle solve_inner_rates(const DualGraph& g, IntegerVector m);

/// Checks integrality and positivity of a, q >= 1 and the L-node rule.
/// With strict_rates off, q = 1 away from the L-nodes is tolerated.
std::vector<AdmissibilityWarning> admissibility_warnings(const DualGraph& g, std::span<const Integer> m,
                                                         std::span<const Rational> a,
                                                         bool strict_rates = true);

/// Coefficient m_v (2 l_v - p_v - chi_v) at each vertex.
Divisor laplacian_formula(const DualGraph& g, std::span<const Integer> m);

struct TheoremCheck {
    bool holds = false;
    bool laplacian_defined = false;  // false when the rates have non-integral slopes
    Divisor laplacian;
    Divisor expected;   // K + 2L - P
    Divisor formula;
    std::vector<std::string> discrepancies;
};

/// Compares the Laplacian of the bundle's rates with K + 2L - P and with
/// laplacian_formula, all computed from the current decorations of g.
TheoremCheck check_theorem_main(const DualGraph& g, const InvariantBundle& bundle);

/// sum_v m_v (chi_v - l_v)
Integer milnor_fiber_euler(const DualGraph& g, std::span<const Integer> m);

struct LeGreuelCheck {
    Integer m_x;   // sum m_v l_v
    Integer m_pi;  // sum m_v p_v
    Integer chi_f;
    bool holds = false;
};

LeGreuelCheck le_greuel_check(const DualGraph& g, std::span<const Integer> m);

}  // namespace inner_rates

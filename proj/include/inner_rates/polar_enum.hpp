#pragma once

#include "inner_rates/invariants.hpp"

#include <string>
#include <vector>

namespace inner_rates {

class NoLNodes : public Error {
public:
    NoLNodes() : Error("graph has no vertex with L > 0") {}
};

/// A polar vector p together with the rates it forces.
struct AdmissibleConfig {
    std::vector<int> p;
    std::vector<Rational> q;
    IntegerVector a;

    friend bool operator==(const AdmissibleConfig&, const AdmissibleConfig&) = default;
};

/// sum_v m_v l_v - sum_v m_v (chi_v - l_v): the value sum_v m_v p_v must take.
Integer total_polar_weight(const DualGraph& g, std::span<const Integer> m);

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<std::string> diagnostics;  // first entry names the first violated constraint
    std::vector<Rational> q;
    std::vector<Rational> a;
};

/// Installs p in place of the graph's P decorations and checks every
/// admissibility constraint. With strict_rates off, q = 1 is tolerated
/// away from the L-nodes.
AdmissibilityReport is_admissible(const DualGraph& g, std::span<const Integer> m, std::span<const int> p,
                                  bool strict_rates = true);

struct EnumerateOptions {
    bool strict_rates = true;
    unsigned threads = 1;
};

struct EnumerationResult {
    IntegerVector m;
    Integer total_weight;
    std::size_t candidates = 0;
    std::vector<AdmissibleConfig> configs;  // lexicographic in p
    std::string diagnostic;                 // set when the search space is empty
};

/*
 * Every nonnegative integer p with sum_v m_v p_v = total_polar_weight whose
 * solved rates are admissible. Ignores the P decorations of g. Candidates are
 * generated in lexicographic order of p (vertex declaration order) and the
 * output keeps that order whatever the thread count.
 */
EnumerationResult enumerate_admissible(const DualGraph& g, const EnumerateOptions& options = {});

/// Copy of g with P decorations replaced by p.
DualGraph with_polar(const DualGraph& g, std::span<const int> p);

}  // namespace inner_rates

#include "inner_rates/polar_enum.hpp"

#include <algorithm>
#include <thread>

namespace inner_rates {

Integer total_polar_weight(const DualGraph& g, std::span<const Integer> m) {
    Integer m_x = 0;
    for (std::size_t v = 0; v < g.size(); ++v) m_x += m[v] * g.vertex(v).l;
    return m_x - milnor_fiber_euler(g, m);
}

DualGraph with_polar(const DualGraph& g, std::span<const int> p) {
    if (p.size() != g.size()) throw DimensionMismatch("polar vector has wrong length");
    DualGraph out = g;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (p[v] < 0) throw Error("polar weights must be nonnegative");
        out.vertex(v).p = p[v];
    }
    return out;
}

AdmissibilityReport is_admissible(const DualGraph& g, std::span<const Integer> m, std::span<const int> p,
                                  bool strict_rates) {
    AdmissibilityReport report;
    const DualGraph installed = with_polar(g, p);
    const Integer expected = total_polar_weight(g, m);
    Integer weighted = 0;
    for (std::size_t v = 0; v < g.size(); ++v) weighted += m[v] * p[v];
    if (weighted != expected) {
        report.diagnostics.push_back("weighted polar sum " + weighted.str() + " differs from " + expected.str());
        return report;
    }

    const CanonicalData canonical = canonical_vector(installed, m);
    RationalVector rhs(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        rhs[v] = Rational(Integer(canonical.k[v] + installed.vertex(v).l - p[v]));
    }
    report.a = solve_linear(intersection_matrix(installed), rhs);
    report.q.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) report.q[v] = report.a[v] / Rational(m[v]);
    for (const auto& w : admissibility_warnings(installed, m, report.a, strict_rates)) {
        report.diagnostics.push_back(w.message);
    }
    report.admissible = report.diagnostics.empty();
    return report;
}

namespace {

// Lexicographic enumeration of p >= 0 with sum m_v p_v = total.
void generate(std::span<const Integer> m, std::size_t v, const Integer& remaining, std::vector<int>& current,
              std::vector<std::vector<int>>& out) {
    if (v + 1 == m.size()) {
        if (remaining % m[v] == 0) {
            current[v] = static_cast<int>(remaining / m[v]);
            out.push_back(current);
        }
        return;
    }
    const Integer limit = remaining / m[v];
    for (int value = 0; Integer(value) <= limit; ++value) {
        current[v] = value;
        generate(m, v + 1, remaining - m[v] * value, current, out);
    }
    current[v] = 0;
}

}  // namespace

EnumerationResult enumerate_admissible(const DualGraph& g, const EnumerateOptions& options) {
    if (std::none_of(g.vertices().begin(), g.vertices().end(), [](const VertexData& v) { return v.l > 0; })) {
        throw NoLNodes();
    }
    EnumerationResult result;
    result.m = solve_multiplicities(g);
    result.total_weight = total_polar_weight(g, result.m);
    if (result.total_weight < 0) {
        result.diagnostic = "total polar weight " + result.total_weight.str() + " is negative; no candidates";
        return result;
    }

    std::vector<std::vector<int>> candidates;
    std::vector<int> current(g.size(), 0);
    generate(result.m, 0, result.total_weight, current, candidates);
    result.candidates = candidates.size();
    if (candidates.empty()) {
        result.diagnostic = "no nonnegative p reaches the total polar weight";
        return result;
    }

    // a = M^{-1}(k + l) - M^{-1} p, with the inverse formed once.
    const RationalMatrix inv = inverse(intersection_matrix(g));
    const CanonicalData canonical = canonical_vector(g, result.m);
    RationalVector base_rhs(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) base_rhs[v] = Rational(Integer(canonical.k[v] + g.vertex(v).l));
    const RationalVector base = inv * base_rhs;

    std::vector<std::optional<AdmissibleConfig>> verdicts(candidates.size());
    auto check_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::vector<int>& p = candidates[i];
            RationalVector a = base;
            for (std::size_t col = 0; col < g.size(); ++col) {
                if (p[col] == 0) continue;
                for (std::size_t row = 0; row < g.size(); ++row) a[row] -= inv.at(row, col) * Rational(p[col]);
            }
            if (!admissibility_warnings(g, result.m, a, options.strict_rates).empty()) continue;
            AdmissibleConfig config;
            config.p = p;
            for (std::size_t v = 0; v < g.size(); ++v) {
                config.q.push_back(a[v] / Rational(result.m[v]));
                config.a.push_back(a[v].numerator());
            }
            verdicts[i] = std::move(config);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, candidates.size());
    if (workers == 1) {
        check_range(0, candidates.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (candidates.size() + workers - 1) / workers;
        for (std::size_t begin = 0; begin < candidates.size(); begin += chunk) {
            pool.emplace_back(check_range, begin, std::min(candidates.size(), begin + chunk));
        }
    }

    for (auto& verdict : verdicts)
        if (verdict) result.configs.push_back(std::move(*verdict));
    return result;
}

}  // namespace inner_rates

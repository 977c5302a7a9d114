#pragma once

#include "inner_rates/pl_function.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace inner_rates {

using VertexPath = std::vector<std::size_t>;

/// All simple vertex paths from `from` to `to`, in lexicographic order of
/// vertex indices. Parallel edges do not produce extra paths.
std::vector<VertexPath> injective_paths(const DualGraph& g, std::size_t from, std::size_t to);

struct ContactResult {
    Rational exponent;
    std::vector<PointOnGraph> witness_path;  // first path attaining the maximum
    std::size_t all_paths_count = 0;
};

/*
 * Inner contact q_{x,y}: the maximum over injective paths from x to y of the
 * minimum of the rate function along the path. Interior edge points act as
 * extra path nodes; the minimum along a traversed segment includes its
 * breakpoints.
 */
ContactResult inner_contact(const DualGraph& g, const PLFunction& rates, std::span<const Rational> lengths,
                            const PointOnGraph& x, const PointOnGraph& y);

/// Vertex-only form: rates given per vertex, no breakpoints.
ContactResult inner_contact(const DualGraph& g, std::span<const Rational> q, std::size_t x, std::size_t y);

/// Exponent F of the ultrametric distance e^{-F}; infinite for x == y.
/// Larger exponent means smaller distance.
class UltrametricExponent {
public:
    static UltrametricExponent infinite() { return UltrametricExponent(); }
    static UltrametricExponent finite(Rational value) { return UltrametricExponent(std::move(value)); }

    bool is_infinite() const { return !value_; }
    const Rational& value() const;
    std::string str() const { return value_ ? value_->str() : "inf"; }

    friend bool operator==(const UltrametricExponent&, const UltrametricExponent&) = default;
    friend std::strong_ordering operator<=>(const UltrametricExponent& a, const UltrametricExponent& b);

private:
    UltrametricExponent() = default;
    explicit UltrametricExponent(Rational v) : value_(std::move(v)) {}
    std::optional<Rational> value_;
};

UltrametricExponent ultrametric_exponent(const DualGraph& g, const PLFunction& rates,
                                         std::span<const Rational> lengths, const PointOnGraph& x,
                                         const PointOnGraph& y);

UltrametricExponent ultrametric_exponent(const DualGraph& g, std::span<const Rational> q, std::size_t x,
                                         std::size_t y);

/// Rate at a point retracting to `base` at the given lcm-metric distance.
Rational rate_off_skeleton(const DualGraph& g, const PLFunction& rates, std::span<const Rational> lengths,
                           const PointOnGraph& base, const Rational& lcm_distance);

}  // namespace inner_rates

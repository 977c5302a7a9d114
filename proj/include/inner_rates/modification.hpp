#pragma once

#include "inner_rates/invariants.hpp"

#include <optional>
#include <string>

namespace inner_rates {

/*
 * A graph obtained by one point blowup, with multiplicities and inner rates
 * propagated to the new vertex and a retraction back onto the original graph.
 * Old vertices keep their indices, ids, m and q; the new vertex is appended.
 */
struct BlowupResult {
    DualGraph graph;
    IntegerVector m;
    std::vector<Rational> q;
    std::optional<std::size_t> new_vertex;  // empty for the identity modification
    PointMap retraction;                    // points of `graph` -> points of the original graph
};

class InvalidTransfer : public Error {
public:
    using Error::Error;
};

/// The trivial modification: same graph, identity retraction.
BlowupResult identity_modification(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q);

/*
 * Blowup of a smooth point of E_v. The new vertex w hangs off v, E_v^2 drops
 * by one, and the given amounts of L and P move from v to w.
 *
 * m_w = m_v + transfer_l and a_w = a_v + 1 - transfer_l + transfer_p, which
 * makes the extended vectors solve the blown-up linear systems exactly. With
 * no transfer this is m_w = m_v, q_w = q_v + 1/m_v.
 */
BlowupResult blowup_smooth(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q,
                           std::size_t v, int transfer_l = 0, int transfer_p = 0,
                           std::optional<std::string> new_id = std::nullopt);

/// Blowup of the double point of edge e = [v, v']: m_w = m_v + m_v' and
/// q_w = (m_v q_v + m_v' q_v') / m_w. Edge e keeps its index as [v, w].
BlowupResult blowup_edge(const DualGraph& g, std::span<const Integer> m, std::span<const Rational> q,
                         std::size_t edge, std::optional<std::string> new_id = std::nullopt);

struct PushforwardCheck {
    bool holds = false;
    bool restriction_ok = false;
    bool laplacian_ok = false;
    bool canonical_ok = false;
    std::vector<std::string> messages;
};

/// r_* of the Laplacian and of K on the blown-up graph against the same
/// quantities on the original one.
PushforwardCheck check_pushforward_invariance(const BlowupResult& before, const BlowupResult& after,
                                              const PLFunction& f_before, const PLFunction& f_after);

/// Smallest "w<k>" id not already used in g.
std::string fresh_vertex_id(const DualGraph& g);

}  // namespace inner_rates

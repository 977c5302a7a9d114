#pragma once

#include "inner_rates/document.hpp"
#include "inner_rates/invariants.hpp"

#include <string>
#include <vector>

namespace inner_rates::test_support {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".graph"; }

inline DualGraph load_fixture(const std::string& name) { return read_document(fixture_path(name)).to_graph(); }

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"e8", "a2_min", "a2_nash", "bs_tneq0", "bs_t0", "smooth_ord0"};
    return names;
}

inline Rational r(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

inline IntegerVector ints(std::initializer_list<long long> values) {
    IntegerVector out;
    for (long long v : values) out.emplace_back(v);
    return out;
}

inline DualGraph single_l_node() {
    DualGraph g;
    g.add_vertex({"v0", -1, 0, 1, 0});
    return g;
}

}  // namespace inner_rates::test_support

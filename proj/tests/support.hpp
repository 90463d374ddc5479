#ifndef CENTERFOCUS_TEST_SUPPORT_HPP
#define CENTERFOCUS_TEST_SUPPORT_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gtest/gtest.h>

#include <centerfocus.hpp>

namespace cftest {

using namespace cf;

inline Poly P(const SystemSpec& s, std::string_view text) { return parse_poly(text, s.vars()); }

inline std::string S(const SystemSpec& s, const Poly& p) { return canonical_string(p, s.vars()); }

inline SystemSpec s12() { return build_generic(Signature({1, 2})); }
inline SystemSpec s123() { return build_generic(Signature({1, 2, 3})); }
inline SystemSpec s01() { return build_generic(Signature({0, 1})); }

inline std::map<VarId, Poly> variety_bindings(const SystemSpec& s) {
    std::map<VarId, Poly> b;
    for (const auto& [n, v] : variety_point()) b.emplace(s.slot(n).var, Poly(v));
    return b;
}

// Point vector over the spec's table: variety chart, other slots random.
inline std::vector<Rational> variety_sample(const SystemSpec& s, RationalSampler& rng) {
    auto pt = random_point(s, rng);
    for (const auto& [n, v] : variety_point()) pt[s.slot(n).var.index] = v;
    return pt;
}

}  // namespace cftest

#endif

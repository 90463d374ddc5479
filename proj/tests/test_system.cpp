#include "support.hpp"

#include <functional>

using namespace cftest;

namespace {

std::vector<std::string> names(const SystemSpec& s) {
    std::vector<std::string> out;
    for (const auto& slot : s.slots()) out.push_back(slot.display_name);
    return out;
}

}  // namespace

TEST(Signature, Validation) {
    EXPECT_THROW(Signature({2, 1}), signature_error);
    EXPECT_THROW(Signature({1, 1}), signature_error);
    EXPECT_THROW(Signature({2, 3}), signature_error);
    EXPECT_THROW(Signature(std::vector<unsigned>{}), signature_error);
    EXPECT_NO_THROW(Signature({0, 1}));
    EXPECT_EQ(Signature({1, 2, 3}).ell(), 2u);
}

TEST(BuildGeneric, QuadraticLayoutNames) {
    EXPECT_EQ(names(s12()), (std::vector<std::string>{"c", "d", "e", "f", "g", "h", "k", "l", "m", "n"}));
}

TEST(BuildGeneric, CubicLayoutHasEighteenSymbols) {
    const auto s = s123();
    EXPECT_EQ(s.slots().size(), 18u);
    const auto n = names(s);
    EXPECT_EQ(std::vector<std::string>(n.begin() + 10, n.end()),
              (std::vector<std::string>{"p", "q", "r", "s", "t", "u", "v", "w"}));
}

TEST(BuildGeneric, SystematicNamesBeyondNamedLayouts) {
    const auto s = build_generic(Signature({1, 3}));
    EXPECT_EQ(s.slots().size(), 12u);
    EXPECT_EQ(s.slots()[4].display_name, "p3_0");
    EXPECT_EQ(s.slots()[8].display_name, "q3_0");
}

TEST(BuildGeneric, SlotCountIdentity) {
    // count = 2 (sum m_i + l) + 4 over signatures starting at 1
    std::function<void(std::vector<unsigned>&, unsigned, unsigned)> walk = [&](std::vector<unsigned>& d, unsigned next,
                                                                                unsigned sum) {
        const Signature sig(d);
        EXPECT_EQ(build_generic(sig).slots().size(), 2 * (sum + sig.ell()) + 4) << sig.to_string();
        EXPECT_EQ(sig.slot_count(), build_generic(sig).slots().size());
        for (unsigned m = next; sum + m <= 10; ++m) {
            d.push_back(m);
            walk(d, m + 1, sum + m);
            d.pop_back();
        }
    };
    std::vector<unsigned> d{1};
    walk(d, 2, 0);
}

TEST(VectorField, QuadraticLayout) {
    const auto s = s12();
    const auto f = vector_field(s);
    EXPECT_EQ(f.P, P(s, "c*x + d*y + g*x^2 + 2*h*x*y + k*y^2"));
    EXPECT_EQ(f.Q, P(s, "e*x + f*y + l*x^2 + 2*m*x*y + n*y^2"));
}

TEST(VectorField, CubicLayoutUsesBinomialPrefactors) {
    const auto s = s123();
    const auto f = vector_field(s);
    EXPECT_EQ(f.P.phase_component(3), P(s, "p*x^3 + 3*q*x^2*y + 3*r*x*y^2 + s*y^3"));
    EXPECT_EQ(f.Q.phase_component(3), P(s, "t*x^3 + 3*u*x^2*y + 3*v*x*y^2 + w*y^3"));
}

TEST(VectorField, AffineLayout) {
    const auto s = s01();
    EXPECT_EQ(vector_field(s).P, P(s, "a + c*x + d*y"));
    EXPECT_EQ(vector_field(s).Q, P(s, "b + e*x + f*y"));
}

TEST(VectorField, ZeroCoefficientsGiveZeroField) {
    auto s = s12();
    for (const auto& slot : s12().slots()) s = s.with_value(slot.display_name, Rational(0));
    EXPECT_TRUE(vector_field(s).P.is_zero());
    EXPECT_TRUE(vector_field(s).Q.is_zero());
}

TEST(VectorField, ComponentsMatchSignature) {
    for (const auto& degs : std::vector<std::vector<unsigned>>{{1, 2}, {1, 2, 3}, {1, 3, 5}}) {
        const auto s = build_generic(Signature(degs));
        const auto f = vector_field(s);
        Poly sum_p;
        for (std::size_t c = 0; c < degs.size(); ++c) {
            const auto part = component_field(s, c);
            EXPECT_FALSE(part.P.is_zero());
            sum_p += part.P;
        }
        EXPECT_EQ(sum_p, f.P);
    }
}

TEST(Variety, RestrictedFieldIsRotationPlusHigherTerms) {
    const auto v = restrict_to_variety(s12());
    const auto f = vector_field(v);
    EXPECT_EQ(f.P, P(v, "y + g*x^2 + 2*h*x*y + k*y^2"));
    EXPECT_EQ(f.Q, P(v, "-x + l*x^2 + 2*m*x*y + n*y^2"));
    EXPECT_TRUE(on_variety(v));
    EXPECT_FALSE(on_variety(s12()));
}

TEST(Variety, Idempotent) {
    const auto v = restrict_to_variety(s123());
    const auto w = restrict_to_variety(v);
    for (std::size_t i = 0; i < v.slots().size(); ++i) EXPECT_EQ(v.value(i), w.value(i));
}

TEST(Variety, NonlinearCoefficientsUntouched) {
    const auto s = s12().with_value("g", rational(1, 2)).with_value("n", Rational(3));
    const auto v = restrict_to_variety(s);
    EXPECT_EQ(*v.value(v.slot_index("g")), rational(1, 2));
    EXPECT_EQ(*v.value(v.slot_index("n")), Rational(3));
    EXPECT_TRUE(v.is_symbolic(v.slot_index("h")));
}

TEST(Variety, ConflictIsReported) {
    const auto s = s12().with_value("d", Rational(2));
    EXPECT_THROW(restrict_to_variety(s), variety_conflict);
}

TEST(Variety, QuadraticFormBecomesSumOfSquares) {
    const auto v = restrict_to_variety(s12());
    EXPECT_EQ(linear_generators(v).k2, P(v, "x^2 + y^2"));
    const auto s = s12();
    EXPECT_EQ(linear_generators(s).k2.substitute(variety_bindings(s)), P(s, "x^2 + y^2"));
}

TEST(LinearGenerators, GenericAndOnVariety) {
    const auto s = s12();
    const auto g = linear_generators(s);
    EXPECT_EQ(g.i1, P(s, "c + f"));
    EXPECT_EQ(g.i2, P(s, "c^2 + 2*d*e + f^2"));
    const auto v = linear_generators(restrict_to_variety(s));
    EXPECT_TRUE(v.i1.is_zero());
    // 2de = 2 * 1 * (-1)
    EXPECT_EQ(v.i2, Poly(-2));
}

TEST(LinearGenerators, DiscriminantsAgreeOnVariety) {
    const auto s = s12();
    const auto d = k2_discriminants(s);
    // classical B^2 - 4AC, expanded by hand
    EXPECT_EQ(d.classical, P(s, "c^2 - 2*c*f + f^2 + 4*d*e"));
    EXPECT_EQ(d.invariant, P(s, "c^2 - 2*c*f + f^2 + 4*d*e"));
    const auto dv = k2_discriminants(restrict_to_variety(s));
    EXPECT_EQ(dv.classical, Poly(-4));
    EXPECT_EQ(dv.invariant, Poly(-4));
}

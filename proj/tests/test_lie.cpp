#include "support.hpp"

using namespace cftest;

namespace {

struct Generators01 : ::testing::Test {
    SystemSpec s = s01();
    Operators ops = operators(s);
    std::map<std::string, Poly> g{
        {"i1", P(s, "c + f")},
        {"i2", P(s, "c^2 + 2*d*e + f^2")},
        {"i3", P(s, "-e*a^2 + c*a*b - f*a*b + d*b^2")},
        {"k1", P(s, "-b*x + a*y")},
        {"k2", P(s, "-e*x^2 + c*x*y - f*x*y + d*y^2")},
        {"k3", P(s, "-e*a*x - f*b*x + c*a*y + d*b*y")},
    };
};

}  // namespace

TEST(Operators, RejectConcreteSystems) { EXPECT_THROW(operators(restrict_to_variety(s12())), std::invalid_argument); }

TEST(Operators, BracketsCloseWithGl2Constants) {
    for (const auto& degs : std::vector<std::vector<unsigned>>{{0, 1}, {1, 2}, {1, 2, 3}, {1, 4}}) {
        const auto s = build_generic(Signature(degs));
        const auto ops = operators(s);
        const auto& X = ops.X;
        const Rational neg(-1);
        // derivations compose opposite to the matrices E11, E12, E21, E22
        EXPECT_EQ(commutator(X[0], X[3]), LieOperator{});
        EXPECT_EQ(commutator(X[1], X[2]), X[3] + neg * X[0]);
        EXPECT_EQ(commutator(X[0], X[1]), neg * X[1]);
        EXPECT_EQ(commutator(X[0], X[2]), X[2]);
        EXPECT_EQ(commutator(X[3], X[1]), X[1]);
        EXPECT_EQ(commutator(X[3], X[2]), neg * X[2]);
    }
}

TEST(Operators, TraceInvariantIsAnnihilated) {
    const auto s = s12();
    const auto ops = operators(s);
    const Poly i1 = null_pseudo_quantity(s);
    EXPECT_TRUE(ops.X[1](i1).is_zero());
    EXPECT_TRUE(ops.X[2](i1).is_zero());
}

TEST(Operators, DiagonalOperatorsActDiagonallyOnMonomials) {
    const auto s = s123();
    const auto ops = operators(s);
    RationalSampler rng(5);
    std::uniform_int_distribution<int> e(0, 3);
    for (int t = 0; t < 50; ++t) {
        Monomial m;
        for (const auto& slot : s.slots()) m = m * Monomial::of(slot.var, e(rng.engine()));
        const Poly p = Poly::term(m, 1);
        for (int i : {0, 3}) {
            const Poly img = ops.D[i](p);
            EXPECT_TRUE(img.is_zero() || (img.size() == 1 && img.terms()[0].first == m));
        }
    }
}

TEST_F(Generators01, AllSixAreComitantsWithExpectedWeights) {
    const std::map<std::string, int> weight{{"i1", 0}, {"i2", 0}, {"i3", -1}, {"k1", -1}, {"k2", -1}, {"k3", -1}};
    for (const auto& [name, p] : g) {
        const auto v = is_comitant(p, s, ops);
        EXPECT_TRUE(v.comitant) << name << " fails " << v.witness;
        ASSERT_TRUE(v.weight.has_value());
        EXPECT_EQ(*v.weight, weight.at(name)) << name;
    }
}

TEST_F(Generators01, ScalingOperatorsOnLinearComitant) {
    EXPECT_EQ(ops.X[0](g["k1"]), g["k1"]);
    EXPECT_EQ(ops.X[3](g["k1"]), g["k1"]);
}

TEST_F(Generators01, Syzygy) {
    const Poly t = g["i1"] * g["k1"] - g["k3"];
    EXPECT_TRUE((t * t + g["k3"] * g["k3"] - g["i2"] * g["k1"] * g["k1"] - 2 * g["i3"] * g["k2"]).is_zero());
}

TEST_F(Generators01, IndependenceRank) {
    EXPECT_EQ(independence_rank({g["i1"], g["i2"], g["i3"]}, s.coefficient_vars(), 5), 3u);
    EXPECT_EQ(independence_rank({P(s, "c"), P(s, "f"), P(s, "c + f")}, s.coefficient_vars(), 5), 2u);
    EXPECT_THROW(independence_rank({}, s.coefficient_vars(), 5), std::invalid_argument);
}

TEST_F(Generators01, ReconstructionFromLeadingCoefficient) {
    EXPECT_EQ(reconstruct_from_semi_invariant(P(s, "-e"), 2, ops), g["k2"]);
    EXPECT_EQ(reconstruct_from_semi_invariant(Poly(5), 0, ops), Poly(5));
    for (const auto& [name, p] : g) {
        const unsigned delta = p.terms().front().first.exponent(var_x) + p.terms().front().first.exponent(var_y);
        EXPECT_EQ(reconstruct_from_semi_invariant(p.phase_coefficient(delta, 0), delta, ops), p) << name;
    }
}

TEST_F(Generators01, ReconstructionRejectsNonSemiInvariants) {
    // c alone: D3 never terminates at degree 0
    EXPECT_THROW(reconstruct_from_semi_invariant(P(s, "c"), 0, ops), reconstruction_error);
    EXPECT_THROW(reconstruct_from_semi_invariant(P(s, "x"), 1, ops), std::invalid_argument);
}

TEST(TypeAndWeight, Examples) {
    const auto s = s12();
    auto t = type_of(linear_generators(s).k2, s);
    ASSERT_TRUE(std::holds_alternative<ComitantType>(t));
    EXPECT_EQ(std::get<ComitantType>(t), (ComitantType{2, {1, 0}}));
    t = type_of(P(s, "c + f"), s);
    EXPECT_EQ(std::get<ComitantType>(t), (ComitantType{0, {1, 0}}));
    EXPECT_TRUE(std::holds_alternative<Inhomogeneous>(type_of(P(s, "x + x^2"), s)));

    EXPECT_EQ(weight_of({4, {8, 2}}, s.signature()), -1);
    EXPECT_EQ(weight_of({6, {20, 4}}, s.signature()), -1);
    EXPECT_EQ(weight_of({0, {0, 0}}, s.signature()), 0);
    EXPECT_FALSE(weight_of({1, {0, 0}}, s.signature()).has_value());
}

TEST(IsComitant, PhaseVariableFailsWithWitness) {
    const auto s = s12();
    const auto v = is_comitant(P(s, "x"), s);
    EXPECT_FALSE(v.comitant);
    EXPECT_EQ(v.witness, "X2");
    EXPECT_EQ(v.residual, P(s, "y"));
    EXPECT_THROW(is_comitant(P(s, "x + c"), s), std::invalid_argument);
}

TEST(IsComitant, AcceptedComitantsHaveIntegerWeight) {
    const auto s = s12();
    const auto ops = operators(s);
    const Poly i1 = P(s, "c + f");
    const Poly k2 = linear_generators(s).k2;
    for (const Poly& p : {i1, k2, k2 * k2, i1 * k2}) {
        const auto v = is_comitant(p, s, ops);
        ASSERT_TRUE(v.comitant);
        EXPECT_TRUE(weight_of(v.type, s.signature()).has_value());
    }
}

TEST(Isobarity, SymbolsAndMixtures) {
    const auto s = s12();
    const auto ops = operators(s);
    EXPECT_TRUE(std::holds_alternative<IsobarityPair>(isobarity_of(P(s, "c"), ops)));
    EXPECT_TRUE(std::holds_alternative<NotIsobaric>(isobarity_of(P(s, "c + g"), ops)));
    EXPECT_THROW(isobarity_of(P(s, "x*c"), ops), std::invalid_argument);
}

TEST(Independence, ComitantsAndTheirLeadingCoefficients) {
    const auto s = s01();
    const auto ops = operators(s);
    const std::vector<Poly> comitants{P(s, "-b*x + a*y"), P(s, "-e*x^2 + c*x*y - f*x*y + d*y^2"), P(s, "c + f")};
    std::vector<Poly> leading;
    for (const auto& p : comitants) {
        const unsigned delta = p.terms().front().first.exponent(var_x) + p.terms().front().first.exponent(var_y);
        leading.push_back(p.phase_coefficient(delta, 0));
    }
    std::vector<VarId> all = s.coefficient_vars();
    all.push_back(var_x);
    all.push_back(var_y);
    EXPECT_EQ(independence_rank(comitants, all, 5), independence_rank(leading, s.coefficient_vars(), 5));
    (void)ops;
}

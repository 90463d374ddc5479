#include "support.hpp"

#include <random>

using namespace cftest;

namespace {

struct Ring : ::testing::Test {
    VarTable vt = [] {
        VarTable t = VarTable::with_phase();
        t.add("a", VarKind::coefficient);
        t.add("b", VarKind::coefficient);
        return t;
    }();
    Poly x = Poly::var(var_x);
    Poly y = Poly::var(var_y);
    Poly read(std::string_view s) const { return parse_poly(s, vt); }
    std::string str(const Poly& p) const { return canonical_string(p, vt); }
};

Poly random_poly(RationalSampler& rng, std::size_t nvars, int terms, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<Poly::Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (std::size_t v = 0; v < nvars; ++v) m = m * Monomial::of(VarId{static_cast<std::uint32_t>(v)}, e(rng.engine()));
        ts.emplace_back(m, rng.next());
    }
    return Poly::from_terms(std::move(ts));
}

}  // namespace

TEST(RationalText, ReducedAndExact) {
    const Rational q = parse_rational("6/4");
    EXPECT_EQ(to_string(q), "3/2");
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
    EXPECT_EQ(rational(1, 3) + rational(1, 6), rational(1, 2));
    EXPECT_THROW(parse_rational("1/0"), parse_error);
    EXPECT_THROW(parse_rational("1.5"), parse_error);
}

TEST_F(Ring, DifferenceOfSquares) { EXPECT_EQ((x + y) * (x - y), x * x - y * y); }

TEST_F(Ring, AdditiveIdentity) {
    const Poly p = read("3*a*x - 1/2*b^2 + y");
    EXPECT_EQ(p + Poly{}, p);
}

TEST_F(Ring, CubeOfSumOfSquaresMatchesBinomialExpansion) {
    Poly expected;
    for (unsigned i = 0; i <= 3; ++i) {
        expected += Poly::term(Monomial::of(var_x, 2 * (3 - i)) * Monomial::of(var_y, 2 * i), Rational(binomial(3, i)));
    }
    EXPECT_EQ((x * x + y * y).pow(3), expected);
    EXPECT_EQ(str((x * x + y * y).pow(3)), "x^6 + 3*x^4*y^2 + 3*x^2*y^4 + y^6");
}

TEST_F(Ring, PartialDerivatives) {
    EXPECT_EQ(partial_derivative(x * x * y, var_x), read("2*x*y"));
    EXPECT_TRUE(partial_derivative(Poly(7), var_x).is_zero());
}

TEST_F(Ring, SubstituteEmptyIsIdentity) {
    const Poly p = read("a*x^2 - b*y + 4");
    EXPECT_EQ(p.substitute(std::map<VarId, Poly>{}), p);
}

TEST_F(Ring, SubstitutionComposes) {
    RationalSampler rng(11);
    const VarId a = vt.at("a");
    const VarId b = vt.at("b");
    for (int i = 0; i < 50; ++i) {
        const Poly p = random_poly(rng, 4, 4, 2);
        const std::map<VarId, Poly> A{{var_x, random_poly(rng, 4, 2, 1)}, {a, random_poly(rng, 4, 2, 1)}};
        const std::map<VarId, Poly> B{{var_y, random_poly(rng, 4, 2, 1)}, {b, random_poly(rng, 4, 2, 1)}};
        // B after A: bind every variable to its image under A, then under B.
        std::map<VarId, Poly> BA;
        for (VarId v : {var_x, var_y, a, b}) {
            auto it = A.find(v);
            BA[v] = (it == A.end() ? Poly::var(v) : it->second).substitute(B);
        }
        EXPECT_EQ(p.substitute(A).substitute(B), p.substitute(BA));
    }
}

TEST(Multidegree, Examples) {
    const auto s = s01();
    const auto k2 = P(s, "-e*x^2 + c*x*y - f*x*y + d*y^2");
    auto md = multidegree(k2, {{var_x, var_y}, s.component_vars(1)});
    ASSERT_TRUE(std::holds_alternative<Homogeneous>(md));
    EXPECT_EQ(std::get<Homogeneous>(md).degrees, (std::vector<unsigned>{2, 1}));

    const auto i3 = P(s, "-e*a^2 + c*a*b - f*a*b + d*b^2");
    md = multidegree(i3, {s.component_vars(0), s.component_vars(1)});
    ASSERT_TRUE(std::holds_alternative<Homogeneous>(md));
    EXPECT_EQ(std::get<Homogeneous>(md).degrees, (std::vector<unsigned>{2, 1}));

    md = multidegree(P(s, "x + x^2"), {{var_x, var_y}});
    ASSERT_TRUE(std::holds_alternative<Inhomogeneous>(md));
    const auto& w = std::get<Inhomogeneous>(md);
    EXPECT_NE(w.first.degree(), w.second.degree());
}

TEST_F(Ring, ExactDivision) {
    EXPECT_EQ(divide_exact(x * x - y * y, x - y), x + y);
    EXPECT_FALSE(divide_exact(x, y).has_value());
    EXPECT_THROW(divide_exact(x, Poly{}), std::domain_error);
}

TEST_F(Ring, CanonicalStrings) {
    EXPECT_EQ(str(x * x + y * y), "x^2 + y^2");
    EXPECT_EQ(str(Poly{}), "0");
    EXPECT_EQ(str(read("x + x^2*y")), "x^2*y + x");
    EXPECT_EQ(str(read("-1/2*a + 3")), "-1/2*a + 3");
}

TEST_F(Ring, ParseErrorsCarryOffsets) {
    try {
        read("x + 2*zz");
        FAIL() << "expected a parse error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(read("x +"), parse_error);
}

TEST_F(Ring, GradedReverseLexicographicOrder) {
    // degree first; ties broken by the smallest power of the last variable
    const Poly p = read("b + a^2 + x*b + y^2 + x*y + x^2");
    EXPECT_EQ(str(p), "x^2 + x*y + y^2 + a^2 + x*b + b");
}

class RandomProperties : public Ring {};

TEST_F(RandomProperties, ThousandCases) {
    RationalSampler rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const Poly p = random_poly(rng, 4, 4, 3);
        const Poly q = random_poly(rng, 4, 3, 2);
        const Poly r = random_poly(rng, 4, 3, 2);
        ASSERT_EQ((p * q) * r, p * (q * r));
        ASSERT_EQ(p * q, q * p);
        ASSERT_EQ(p * (q + r), p * q + p * r);
        const VarId v{static_cast<std::uint32_t>(i % 4)};
        ASSERT_EQ((p * q).derivative(v), p.derivative(v) * q + p * q.derivative(v));
        ASSERT_EQ((p + r).derivative(v), p.derivative(v) + r.derivative(v));
        if (!q.is_zero()) {
            auto d = divide_exact(p * q, q);
            ASSERT_TRUE(d.has_value());
            ASSERT_EQ(*d, p);
        }
        const auto pt = rng.point(4);
        ASSERT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
        ASSERT_EQ(read(str(p)), p);
        ASSERT_EQ(p == r, str(p) == str(r));
        ASSERT_EQ((p - r).is_zero(), str(p) == str(r));
    }
}

TEST_F(Ring, ContentSignFollowsLeadingCoefficient) {
    const Poly p = read("-4*x^2 + 6*y");
    EXPECT_EQ(p.content(), Rational(-2));
    EXPECT_EQ(read("2/3*x + 4/9").content(), rational(2, 9));
}

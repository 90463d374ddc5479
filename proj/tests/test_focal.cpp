#include "support.hpp"

using namespace cftest;

namespace {

// First Lyapunov coefficient of x' = -w y + f, y' = w x + g from the classical
// Hopf normal-form formula (derivatives at the origin).
Poly hopf_coefficient(const SystemSpec& spec) {
    const auto field = vector_field(spec);
    const Poly f = field.P - Poly::var(var_y);
    const Poly g = field.Q + Poly::var(var_x);
    const Rational w(-1);
    const std::map<VarId, Rational> origin{{var_x, 0}, {var_y, 0}};
    auto d = [&](const Poly& p, std::initializer_list<VarId> vs) {
        Poly r = p;
        for (VarId v : vs) r = r.derivative(v);
        return r.substitute(origin);
    };
    const VarId X = var_x;
    const VarId Y = var_y;
    const Poly cubic = d(f, {X, X, X}) + d(f, {X, Y, Y}) + d(g, {X, X, Y}) + d(g, {Y, Y, Y});
    const Poly quad = d(f, {X, Y}) * (d(f, {X, X}) + d(f, {Y, Y})) - d(g, {X, Y}) * (d(g, {X, X}) + d(g, {Y, Y})) -
                      d(f, {X, X}) * d(g, {X, X}) + d(f, {Y, Y}) * d(g, {Y, Y});
    return cubic * rational(1, 16) + quad * (Rational(1) / (16 * w));
}

}  // namespace

TEST(FocalQuantities, FirstQuantityClosedForm) {
    const auto s = s12();
    const auto L = focal_quantities(restrict_to_variety(s), 1).L;
    ASSERT_EQ(L.size(), 1u);
    EXPECT_EQ(L[0], P(s, "1/2*g*l - 1/2*g*h - 1/2*k*h - 1/2*k*n + 1/2*m*l + 1/2*m*n"));
}

TEST(FocalQuantities, FirstQuantityIsTwiceTheHopfCoefficient) {
    for (const auto& base : {s12(), s123()}) {
        const auto v = restrict_to_variety(base);
        EXPECT_EQ(focal_quantities(v, 1).L[0], hopf_coefficient(v) * 2) << base.signature().to_string();
    }
}

TEST(FocalQuantities, ConcreteExampleAgainstTwoOracles) {
    const auto s = restrict_to_variety(s12())
                       .with_value("g", Rational(1))
                       .with_value("m", Rational(1))
                       .with_value("n", Rational(1))
                       .with_value("h", Rational(0))
                       .with_value("k", Rational(0))
                       .with_value("l", Rational(0));
    const Poly l1 = focal_quantities(s, 1).L[0];
    EXPECT_EQ(l1, Poly(rational(1, 2)));
    EXPECT_EQ(hopf_coefficient(s) * 2, Poly(rational(1, 2)));

    // Direct matching to degree 4 with its own unknown table.
    VarTable vt = VarTable::with_phase();
    std::vector<VarId> u;
    for (int i = 0; i < 4; ++i) u.push_back(vt.add("f3_" + std::to_string(i), VarKind::auxiliary));
    for (int i = 0; i < 5; ++i) u.push_back(vt.add("f4_" + std::to_string(i), VarKind::auxiliary));
    const VarId L = vt.add("L", VarKind::auxiliary);
    const Poly x = Poly::var(var_x);
    const Poly y = Poly::var(var_y);
    Poly U = x * x + y * y;
    for (int i = 0; i < 4; ++i) U += Poly::var(u[i]) * x.pow(3 - i) * y.pow(i);
    for (int i = 0; i < 5; ++i) U += Poly::var(u[4 + i]) * x.pow(4 - i) * y.pow(i);
    const Poly xdot = y + x * x;
    const Poly ydot = -x + 2 * x * y + y * y;
    const Poly rho = x * x + y * y;
    const Poly residual = U.derivative(var_x) * xdot + U.derivative(var_y) * ydot - Poly::var(L) * rho * rho;
    std::vector<Poly> eqs;
    for (unsigned deg = 3; deg <= 4; ++deg) {
        for (unsigned i = 0; i <= deg; ++i) eqs.push_back(residual.phase_coefficient(deg - i, i));
    }
    eqs.push_back(Poly::var(u[4 + 2]));  // kernel fixed by zeroing the x^2 y^2 coefficient
    const std::size_t n = u.size() + 1;
    RationalMatrix m(eqs.size(), n + 1);
    std::vector<VarId> unknowns = u;
    unknowns.push_back(L);
    for (std::size_t r = 0; r < eqs.size(); ++r) {
        Poly rest = eqs[r];
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = eqs[r].derivative(unknowns[c]).constant_value();
            rest -= Poly::var(unknowns[c]) * m(r, c);
        }
        ASSERT_TRUE(rest.is_constant());
        m(r, n) = -rest.constant_value();
    }
    const auto piv = row_reduce(m);
    ASSERT_EQ(piv.size(), n);
    EXPECT_EQ(m(n - 1, n), rational(1, 2));
}

TEST(FocalQuantities, LinearCenterHasNoFocalQuantities) {
    auto s = restrict_to_variety(s123());
    for (const auto& slot : s.slots()) {
        if (s.is_symbolic(s.slot_index(slot.display_name))) s = s.with_value(slot.display_name, Rational(0));
    }
    for (const auto& l : focal_quantities(s, 3).L) EXPECT_TRUE(l.is_zero());
}

TEST(FocalQuantities, CubicBlockZeroReducesToQuadraticSystem) {
    auto s = restrict_to_variety(s123());
    for (const char* n : {"p", "q", "r", "s", "t", "u", "v", "w"}) s = s.with_value(n, Rational(0));
    const auto a = focal_quantities(s, 2).L;
    const auto b = focal_quantities(restrict_to_variety(s12()), 2).L;
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(S(s, a[k]), S(s12(), b[k]));
}

TEST(FocalQuantities, ConventionChangesSecondQuantityByMultipleOfFirst) {
    const auto v = restrict_to_variety(s12());
    const auto mono = focal_quantities(v, 2);
    const auto orth = focal_quantities(v, 2, KernelNormalization::orthogonal());
    const auto other = focal_quantities(v, 2, KernelNormalization::monomial({{4, 0}}));
    EXPECT_EQ(mono.L[0], orth.L[0]);
    EXPECT_EQ(mono.L[0], other.L[0]);
    EXPECT_TRUE(divide_exact(mono.L[1] - orth.L[1], mono.L[0]).has_value());
    EXPECT_TRUE(divide_exact(mono.L[1] - other.L[1], mono.L[0]).has_value());
    EXPECT_NE(mono.L[1], orth.L[1]);
}

TEST(FocalQuantities, PreconditionsAreChecked) {
    EXPECT_THROW(focal_quantities(restrict_to_variety(s12()), 0), std::invalid_argument);
    EXPECT_THROW(focal_quantities(s12(), 1), variety_conflict);
}

TEST(FocalQuantities, IndependenceOfTheFirstQuantities) {
    const auto v = restrict_to_variety(s12());
    const auto L = focal_quantities(v, 3).L;
    std::vector<VarId> vars = v.component_vars(1);
    EXPECT_EQ(independence_rank({L[0], L[1]}, vars, 5), 2u);
    const auto r = independence_rank({L[0], L[1], L[2]}, vars, 5);
    EXPECT_GE(r, 2u);
    EXPECT_LE(r, 6u);
}

TEST(FocalQuantities, ConcreteAndSymbolicAgree) {
    const auto named = restrict_to_variety(s12());
    RationalSampler rng(3);
    auto a = named;
    for (const char* n : {"g", "h", "k", "l", "m", "n"}) a = a.with_value(n, rng.next());
    const auto la = focal_quantities(a, 3).L;
    EXPECT_FALSE(la[2].is_zero());
    const auto sym = focal_quantities(named, 3).L;
    const auto pt = [&] {
        std::vector<Rational> p(a.vars().size());
        for (std::size_t i = 0; i < a.slots().size(); ++i) p[a.slots()[i].var.index] = *a.value(i);
        return p;
    }();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(sym[k].evaluate(pt), la[k].constant_value());
}

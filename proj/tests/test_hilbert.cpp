#include "support.hpp"

#include <numeric>

using namespace cftest;

namespace {

// Coefficients of 1/((1-t)(1-t^2)(1-t^3)): partitions into parts 1, 2, 3.
std::vector<Rational> partitions123(unsigned N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (unsigned a = 0; a <= N; ++a) {
        for (unsigned b = 0; a + 2 * b <= N; ++b) {
            for (unsigned d = 0; a + 2 * b + 3 * d <= N; ++d) c[a + 2 * b + 3 * d] += 1;
        }
    }
    return c;
}

}  // namespace

TEST(Krull, BuiltinsAndTrivialSeries) {
    EXPECT_EQ(krull_dimension(builtin_series("S01")), 5u);
    EXPECT_EQ(krull_dimension(builtin_series("SI01")), 3u);
    EXPECT_EQ(krull_dimension(HilbertSeries::univariate("1", {{1, 1}})), 1u);
    EXPECT_EQ(krull_dimension(HilbertSeries::univariate("1 - t", {{1, 1}})), 0u);
    EXPECT_THROW(krull_dimension(HilbertSeries::univariate("0", {{1, 1}})), std::domain_error);
    EXPECT_THROW(krull_dimension(HilbertSeries::univariate("1 - 2*t + t^2", {{1, 1}})), std::domain_error);
}

TEST(Krull, MatchesReferenceTable) {
    EXPECT_EQ(krull_dimension(builtin_series("S01")), reference("S_{0,1}").krull);
    EXPECT_EQ(krull_dimension(builtin_series("SI01")), reference("SI_{0,1}").krull);
    EXPECT_THROW(reference("SI_99"), std::out_of_range);
    EXPECT_THROW(builtin_series("nope"), std::invalid_argument);
}

TEST(Krull, CommonFactorDoesNotChangeDimension) {
    for (unsigned a = 1; a <= 5; ++a) {
        // (1 - t^a) / ((1-t)(1-t^2)(1-t^3)(1-t^a))
        std::string num = "1 - t^" + std::to_string(a);
        auto h = HilbertSeries::univariate(num, {{1, 1}, {2, 1}, {3, 1}, {a, 1}});
        EXPECT_EQ(krull_dimension(h), 3u) << a;
        EXPECT_EQ(expand(h, 30), partitions123(30)) << a;
    }
}

TEST(Expand, PartitionCountOracle) {
    const auto h = builtin_series("SI01");
    const auto c = expand(h, 60);
    EXPECT_EQ(c, partitions123(60));
    const std::vector<Rational> head{1, 1, 2, 3, 4, 5, 7};
    EXPECT_EQ(std::vector<Rational>(c.begin(), c.begin() + 7), head);
}

TEST(Expand, BuiltinsAreNonNegative) {
    for (const auto& name : {"S01", "SI01"}) {
        for (const auto& v : expand(builtin_series(name), 100)) EXPECT_GE(v, 0) << name;
    }
}

TEST(Compare, InvariantsBelowComitants) {
    const auto s = expand(builtin_series("S01"), 80);
    const auto i = expand(builtin_series("SI01"), 80);
    for (std::size_t n = 0; n < s.size(); ++n) EXPECT_LE(i[n], s[n]) << n;
    EXPECT_EQ(compare(builtin_series("SI01"), builtin_series("SI01"), 40), SeriesOrder::equal);
    const auto bigger = HilbertSeries::univariate("1", {{1, 2}, {2, 1}, {3, 1}}, "z");
    EXPECT_EQ(compare(builtin_series("SI01"), bigger, 40), SeriesOrder::less);
    EXPECT_EQ(compare(bigger, builtin_series("SI01"), 40), SeriesOrder::greater);
}

TEST(Compare, Envelope) {
    // partitions into 1,2,3 grow like n^2 / 12
    EXPECT_TRUE(envelope_check(builtin_series("SI01"), 1, 3, 50));
    EXPECT_FALSE(envelope_check(builtin_series("S01"), Rational(1, 100), 1, 50));
    EXPECT_THROW(envelope_check(builtin_series("SI01"), 1, 0, 10), std::invalid_argument);
}

TEST(Specialize, GradedInvariants) {
    const auto h = specialize(builtin_series("S01-graded"), Specialization::invariants);
    const auto want = builtin_series("SI01-graded");
    // same formal series in z0, z1
    EXPECT_EQ(h.numerator, parse_poly("1", h.vars));
    ASSERT_EQ(h.denominator.size(), want.denominator.size());
    std::vector<std::string> got_f;
    std::vector<std::string> want_f;
    for (const auto& f : h.denominator) got_f.push_back(canonical_string(Poly::term(f.monomial, 1), h.vars));
    for (const auto& f : want.denominator) want_f.push_back(canonical_string(Poly::term(f.monomial, 1), want.vars));
    std::sort(got_f.begin(), got_f.end());
    std::sort(want_f.begin(), want_f.end());
    EXPECT_EQ(got_f, want_f);
}

TEST(Specialize, CommonVariableRecoversUnivariate) {
    const auto h = specialize(builtin_series("S01-graded"), Specialization::common, "u", "u");
    EXPECT_EQ(expand(h, 40), expand(builtin_series("S01"), 40));
    EXPECT_EQ(krull_dimension(h), 5u);
    const auto i = specialize(builtin_series("SI01-graded"), Specialization::common, "u", "z");
    EXPECT_EQ(expand(i, 40), expand(builtin_series("SI01"), 40));
}

TEST(Rho, ClosedForm) {
    EXPECT_EQ(rho_bound(Signature({1, 2})), 9u);
    EXPECT_EQ(rho_bound(Signature({1, 3})), 11u);
    EXPECT_EQ(rho_bound(Signature({1, 2, 3})), 17u);
    EXPECT_EQ(rho_bound(Signature({1})), 3u);
    EXPECT_EQ(rho_bound(Signature({0, 1})), 5u);
}

TEST(Rho, RelatesToSlotCount) {
    // 2(sum m + l) + 1 for every signature with sum m <= 12
    unsigned seen = 0;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        for (unsigned lead = 0; lead <= 1; ++lead) {
            std::vector<unsigned> degs;
            if (lead == 0) degs.push_back(0);
            degs.push_back(1);
            for (unsigned b = 0; b < 10; ++b) {
                if (mask & (1u << b)) degs.push_back(b + 2);
            }
            const unsigned sum = std::accumulate(degs.begin(), degs.end(), 0u);
            if (sum > 12) continue;
            const unsigned ell = static_cast<unsigned>(degs.size()) - 1;
            EXPECT_EQ(rho_bound(Signature(degs)), 2 * (sum + ell) + 1);
            ++seen;
        }
    }
    EXPECT_GT(seen, 20u);
}

TEST(Rho, ReferenceDimensionsWithinBound) {
    EXPECT_LE(reference("SI_{1,2}").krull, rho_bound(Signature({1, 2})));
    EXPECT_LE(reference("SI_{1,2,3}").krull, rho_bound(Signature({1, 2, 3})));
    EXPECT_LE(reference("SI_{0,1}").krull, rho_bound(Signature({0, 1})));
    for (const auto& [name, e] : reference_table()) {
        if (e.integer_basis) {
            EXPECT_LE(e.krull, *e.integer_basis) << name;
        }
    }
}

#include "support.hpp"

using namespace cftest;

TEST(Shorthand, VarietyAndSymbolic) {
    const auto s = parse_system("s(1,2); V");
    EXPECT_TRUE(on_variety(s));
    EXPECT_EQ(s.signature().degrees(), (std::vector<unsigned>{1, 2}));
    for (const auto& n : {"g", "h", "k", "l", "m", "n"}) EXPECT_TRUE(s.is_symbolic(s.slot_index(n))) << n;
}

TEST(Shorthand, AssignmentsZeroFill) {
    const auto s = parse_system("s(1,2); V; g=1, m=1/2");
    for (std::size_t i = 0; i < s.slots().size(); ++i) EXPECT_FALSE(s.is_symbolic(i));
    EXPECT_EQ(*s.value(s.slot_index("m")), Rational(1, 2));
    EXPECT_EQ(*s.value(s.slot_index("h")), Rational(0));
    EXPECT_EQ(*s.value(s.slot_index("e")), Rational(-1));
}

TEST(Shorthand, Errors) {
    EXPECT_THROW(parse_system("s(2,1)"), std::invalid_argument);
    EXPECT_THROW(parse_system(""), parse_error);
    EXPECT_THROW(parse_system("s(1,2); symbolic; g=1"), input_error);
    try {
        parse_system("s(1,2); g=1, zz=2");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 13u);
    }
    EXPECT_THROW(parse_system("s(1,2); g=1/0"), parse_error);
}

TEST(Json, Coefficients) {
    const auto s = parse_system(R"({"signature": [1, 2], "coefficients": {"g": "1/2", "h": 3, "k": null}, "variety": true})");
    EXPECT_TRUE(on_variety(s));
    EXPECT_EQ(*s.value(s.slot_index("g")), Rational(1, 2));
    EXPECT_EQ(*s.value(s.slot_index("h")), Rational(3));
    EXPECT_TRUE(s.is_symbolic(s.slot_index("k")));
    EXPECT_THROW(parse_system(R"({"signature": [1, 2], "coefficients": {"zz": 1}})"), input_error);
    EXPECT_THROW(parse_system(R"({"coefficients": {}})"), input_error);
    EXPECT_THROW(parse_system(R"({"signature": [1, 2],)"), input_error);
}

TEST(Json, DescribeRoundTrip) {
    const auto s = parse_system("s(1,2); V; g=1, n=1, m=1");
    const auto d = describe(s);
    EXPECT_EQ(d["on_variety"], true);
    const auto back = parse_system_json(d);
    for (std::size_t i = 0; i < s.slots().size(); ++i) EXPECT_EQ(s.value(i), back.value(i));
}

TEST(Point, ApplyAndConflict) {
    const auto v = parse_system("s(1,2); V");
    const auto s = apply_point(v, json{{"g", "2"}, {"h", 1}});
    EXPECT_EQ(*s.value(s.slot_index("g")), Rational(2));
    EXPECT_EQ(*s.value(s.slot_index("n")), Rational(0));
    EXPECT_THROW(apply_point(v, json{{"c", 5}}), variety_conflict);
    EXPECT_NO_THROW(apply_point(v, json{{"c", 0}}));
    EXPECT_THROW(apply_point(v, json{{"zz", 1}}), input_error);
    EXPECT_THROW(apply_point(v, json::array()), input_error);
}

TEST(Series, JsonAndBuiltin) {
    const auto h = parse_series(R"({"numerator": "1 - u + u^2", "denominator": [[1,2],[2,1],[3,2]], "variable": "u"})");
    EXPECT_EQ(expand(h, 30), expand(builtin_series("S01"), 30));
    const auto g = parse_series(R"({"numerator": "1", "denominator": [["z1", 1], ["z1^2", 1], ["z0^2*z1", 1]]})");
    EXPECT_EQ(g.denominator.size(), 3u);
    EXPECT_EQ(krull_dimension(parse_series("builtin:SI01")), 3u);
    EXPECT_THROW(parse_series("builtin:XX"), input_error);
    EXPECT_THROW(parse_series("{"), input_error);
    EXPECT_THROW(parse_series(R"({"numerator": "1"})"), input_error);
}

TEST(PolyArg, UsesSystemSymbols) {
    const auto s = parse_system("s(1,2)");
    EXPECT_EQ(parse_poly_arg("c + f", s), P(s, "f + c"));
    EXPECT_THROW(parse_poly_arg("c + zz", s), parse_error);
}

#include <gtest/gtest.h>

#include "fibprod/json_io.hpp"
#include "support/generators.hpp"

using namespace fibprod;
using namespace fibprod::testing;
using fibprod::json_io::Json;

TEST(Rationals, ParseAndFormat) {
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
    EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(format_rational(parse_rational("4/2")), "2");
    EXPECT_EQ(format_rational(parse_rational("0/5")), "0");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("1.5"), Error);
    EXPECT_THROW(parse_rational("a/b"), Error);
    EXPECT_THROW(parse_rational(""), Error);
    EXPECT_THROW(parse_rational("1/-2"), Error);
}

TEST(Rationals, JsonAcceptsIntegers) {
    EXPECT_EQ(json_io::rational_from_json(Json(7)), 7);
    EXPECT_EQ(json_io::rational_from_json(Json("7/3")), make_rational(7, 3));
    EXPECT_THROW(json_io::rational_from_json(Json(1.5)), Error);
}

TEST(RingClassJson, CanonicalOrder) {
    auto s = SpaceSpec::semistable(2, 3, 1, 0);
    auto x = RingClass::monomial(s, {1, 0, 0}) + RingClass::monomial(s, {0, 1, 2}, make_rational(-1, 2)) +
             RingClass::monomial(s, {0, 1, 0});
    EXPECT_EQ(json_io::to_json(x).dump(),
              R"([{"e":0,"a":1,"b":0,"c":"1"},{"e":0,"a":1,"b":2,"c":"-1/2"},{"e":1,"a":0,"b":0,"c":"1"}])");
}

TEST(RingClassJson, ReparsesToSameClass) {
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        auto s = random_sample(rng).space;
        std::vector<RawTerm> raw;
        for (int k = 0; k < 5; ++k)
            raw.push_back({uniform(rng, 0, 1), uniform(rng, 0, s.r1()), uniform(rng, 0, s.r2()),
                           random_rational(rng)});
        auto x = reduce(raw, s);
        auto again = reduce(json_io::raw_terms_from_json(json_io::to_json(x)), s);
        EXPECT_EQ(again, x);
    }
}

TEST(SpaceJson, DefaultsToSemistableSlopes) {
    auto s = json_io::space_from_json(Json::parse(R"({"r1":2,"r2":3,"d1":1,"d2":-3})"));
    EXPECT_EQ(s.mu11(), make_rational(1, 2));
    EXPECT_EQ(s.mu21(), -1);
    auto back = json_io::space_from_json(json_io::to_json(s));
    EXPECT_EQ(back, s);
    EXPECT_THROW(json_io::space_from_json(Json::parse(R"({"r1":2,"r2":3,"d1":1})")), Error);
    EXPECT_THROW(json_io::space_from_json(Json::parse(R"({"r1":70,"r2":3,"d1":1,"d2":0})")), Error);
}

TEST(BundleJson, BothShapes) {
    auto a = json_io::hn_from_json(Json::parse(R"({"hn":[{"rank":1,"degree":-1},{"rank":1,"degree":1}],"normalized":true,"genus":2})"));
    EXPECT_EQ(a.quotients.size(), 2u);
    EXPECT_TRUE(a.normalized);
    EXPECT_EQ(a.genus, 2);
    EXPECT_EQ(json_io::hn_from_json(json_io::to_json(a)), a);
    auto b = json_io::hn_from_json(Json::parse(R"({"split_degrees":[2,2,-1]})"));
    EXPECT_EQ(json_io::to_json(b).dump(), R"({"hn":[{"rank":1,"degree":-1},{"rank":2,"degree":4}]})");
    EXPECT_THROW(json_io::hn_from_json(Json::parse(R"({"hn":[{"rank":1}]})")), Error);
}

TEST(ClassJson, DivisorAndCurve) {
    auto d = json_io::divisor_from_json(Json::parse(R"({"basis":"tau","coords":["2","3/4",1]})"));
    EXPECT_EQ(d.basis, DivisorBasis::tau);
    EXPECT_EQ(d.coords[1], make_rational(3, 4));
    EXPECT_EQ(json_io::to_json(d).dump(), R"({"basis":"tau","coords":["2","3/4","1"]})");
    auto c = json_io::curve_from_json(Json::parse(R"({"basis":"delta-bar","coords":["0","0","1"]})"));
    EXPECT_EQ(c.basis, CurveBasis::delta_bar);
    EXPECT_EQ(json_io::curve_from_json(json_io::to_json(c)), c);
    EXPECT_THROW(json_io::divisor_from_json(Json::parse(R"({"basis":"delta","coords":["0","0","1"]})")), Error);
    EXPECT_THROW(json_io::divisor_from_json(Json::parse(R"({"basis":"eta","coords":["0","0"]})")), Error);
}

TEST(ResultJson, ShapeAndRoundTrip) {
    auto r = SeshadriResult::exact(1, CaseTag::horizontal_curve, {"ample"});
    auto j = json_io::to_json(r);
    EXPECT_EQ(j["kind"], "exact");
    EXPECT_EQ(j["value"], "1");
    EXPECT_EQ(j["justification"], "Thm4.3.iii");
    EXPECT_EQ(json_io::seshadri_result_from_json(j), r);
    auto iv = SeshadriResult::interval(make_rational(1, 2), 2, CaseTag::generic_bounds, {});
    auto k = json_io::to_json(iv);
    EXPECT_FALSE(k.contains("value"));
    EXPECT_EQ(k["lower"], "1/2");
    EXPECT_EQ(json_io::seshadri_result_from_json(k), iv);
}

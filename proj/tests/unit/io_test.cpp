/* Copyright 2026 The Trigonal Isogeny Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"
#include "trigonal/io.hpp"
#include "trigonal/report.hpp"

namespace trigonal {
namespace {

std::string data(const std::string& name) { return std::string(TRIGONAL_TEST_DATA) + "/" + name; }

const Field& F37() { return make_extension(37, 1); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

// encode, decode, encode again, and compare both the objects and the text
template <class R, class Decode>
void expect_roundtrip(const R& r, Decode decode) {
  const Json j = to_json(r);
  const R back = decode(Json::parse(j.dump()));
  EXPECT_TRUE(back == r);
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Io, CurveFileRoundTrip) {
  const Json j = read_json_file(data("curve37.json"));
  const HCurve h = curve_from_json(j);
  EXPECT_EQ(h.f(), Poly::from_ints(F37(), {2, 29, 12, 33, 20, 15, 28, 1}));
  EXPECT_EQ(curve_to_json(h), j);
}

TEST(Io, CurveRejections) {
  auto parse = [](const char* text) { return [=] { curve_from_json(Json::parse(text)); }; };
  EXPECT_EQ(code_of(parse(R"({"p":"37","f":["1","0","0","0","0","0","0","1"]})")), ErrorCode::kParseError);
  EXPECT_EQ(code_of(parse(R"({"p":"37","f":[1,0,0,0,0,0,0,1,0]})")), ErrorCode::kParseError);
  EXPECT_EQ(code_of(parse(R"({"p":"37","f":["37","0","0","0","0","0","0","1","0"]})")), ErrorCode::kParseError);
  EXPECT_EQ(code_of(parse(R"({"p":"37","f":[" 1","0","0","0","0","0","0","1","0"]})")), ErrorCode::kParseError);
  EXPECT_EQ(code_of(parse(R"({"p":"35","f":["1","0","0","0","0","0","0","1","0"]})")), ErrorCode::kNonPrime);
  EXPECT_EQ(code_of(parse(R"({"p":"3","f":["1","0","0","0","0","0","0","1","0"]})")), ErrorCode::kPrimeTooSmall);
  EXPECT_EQ(code_of(parse(R"({"p":"37","f":["0","0","1","0","0","0","0","1","0"]})")), ErrorCode::kInvalidCurve);
  EXPECT_EQ(code_of(parse(R"({"p":"37"})")), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { read_json_arg("{not json"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { read_json_file(data("missing.json")); }), ErrorCode::kParseError);
}

TEST(Io, ElementsAndPolynomials) {
  Rng rng(1);
  for (int k = 1; k <= 4; ++k) {
    const Field& f = make_extension(37, k);
    for (int i = 0; i < 10; ++i) {
      const Fe a = f.random(rng);
      const Json j = to_json(a);
      EXPECT_EQ(j.is_string(), k == 1);
      EXPECT_EQ(fe_from_json(j, F37()), a);
    }
    std::vector<Fe> c;
    for (int i = 0; i < 4; ++i) c.push_back(f.random(rng));
    c.push_back(f.one());
    const Poly p(f, c);
    EXPECT_EQ(poly_from_json(to_json(p), F37()), p);
    EXPECT_EQ(poly_from_json(to_json(Poly(f)), F37()), Poly(f));
  }
  EXPECT_EQ(code_of([] { poly_from_json(Json::parse(R"(["1","0"])"), F37()); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { fe_from_json(Json::parse(R"({"p":"41","k":2,"c":["1","0"]})"), F37()); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { fe_from_json(Json::parse(R"({"p":"37","k":2,"c":["1"]})"), F37()); }),
            ErrorCode::kParseError);
}

TEST(Io, DivisorInput) {
  const HCurve h = curve_from_json(read_json_file(data("curve37.json")));
  const Json j = Json::parse(R"({"points_plus":[["10","28"]],"points_minus":[["14","6"]]})");
  const DivisorInput d = divisor_from_json(j, h.field());
  EXPECT_EQ(to_json(d), j);
  const OddModel m = to_odd_model(h);
  const Point p{F37().element(10), F37().element(28)}, q{F37().element(14), F37().element(6)};
  EXPECT_EQ(divisor_class(m, d), class_from_points(h, {p}, {q}));
  EXPECT_EQ(code_of([&] { divisor_from_json(Json::parse(R"({"points_plus":[["10","28"]],"points_minus":[]})"), h.field()); }),
            ErrorCode::kParseError);
  const DivisorInput off = divisor_from_json(Json::parse(R"({"points_plus":[["10","27"]],"points_minus":[["14","6"]]})"),
                                             h.field());
  EXPECT_EQ(code_of([&] { divisor_class(m, off); }), ErrorCode::kParseError);
}

TEST(Io, DivisorOnOcticUsesOddModel) {
  const HCurve h = curve_from_json(read_json_file(data("curve101_twisted.json")));
  ASSERT_EQ(h.degree(), 8);
  const OddModel m = to_odd_model(h);
  const Fe w = roots(h.f()).front();
  Rng rng(4);
  for (int i = 0; i < 5; ++i) {
    const auto p = random_point(h, rng);
    ASSERT_TRUE(p);
    const auto ps = pull_point(*p, m.chart);
    if (!ps) continue;
    // the chosen Weierstrass point is the base point of the odd model
    const DivisorInput d{{Point{w, h.field().zero()}}, {*p}};
    EXPECT_EQ(divisor_class(m, d), negate(point_class(*ps)));
  }
}

TEST(Io, ErrorObjects) {
  EXPECT_EQ(exit_code(ErrorCode::kParseError), 2);
  EXPECT_EQ(exit_code(ErrorCode::kNonPrime), 2);
  EXPECT_EQ(exit_code(ErrorCode::kInvalidCurve), 2);
  EXPECT_EQ(exit_code(ErrorCode::kNotRational), 1);
  EXPECT_EQ(exit_code(ErrorCode::kNoTractableSubgroup), 1);
  const Json j = error_json(Error(ErrorCode::kNotRational, "discriminant is not a square"));
  EXPECT_EQ(j["error"]["code"], "NotRational");
  EXPECT_EQ(j["error"]["message"], "discriminant is not a square");
}

TEST(Report, AnalyzeReferenceCurve) {
  const HCurve h = curve_from_json(read_json_file(data("curve37.json")));
  const AnalyzeReport r = analyze(h);
  EXPECT_EQ(pattern_string(r.pattern), "6-1-1");
  ASSERT_EQ(r.subgroups.size(), 1u);
  const auto& s = r.subgroups[0];
  EXPECT_TRUE(s.flags.trigonal_rational);
  EXPECT_TRUE(s.flags.alpha_square);
  const Field& k = s.factors.front().field();
  EXPECT_EQ(k.degree(), 3);
  EXPECT_EQ(s.factors.front(), (BinaryForm{embed(Poly::from_ints(F37(), {20, 1}), k), 2}));
  expect_roundtrip(r, analyze_report_from_json);
}

TEST(Report, IsogenyRoundTrip) {
  const HCurve h = curve_from_json(read_json_file(data("curve37.json")));
  const VerifyOptions opt{3, 2, 9};
  const IsogenyReport r = isogeny_report(h, 0, 1, &opt);
  EXPECT_EQ(r.map, (TrigonalMap{F37().element(16), F37().element(22), F37().element(32), F37().element(18)}));
  ASSERT_TRUE(r.verification);
  EXPECT_TRUE(r.verification->ok());
  ASSERT_TRUE(r.verification->zeta);
  EXPECT_EQ(r.verification->zeta->counts[0], 42);
  EXPECT_EQ(r.verification->roundtrip->consensus(), "+2");
  expect_roundtrip(r, isogeny_report_from_json);
  expect_roundtrip(isogeny_report(h, 0, -1, nullptr), isogeny_report_from_json);
}

TEST(Report, NonRationalIsogenyStillReports) {
  const HCurve h = curve_from_json(read_json_file(data("curve101_twisted.json")));
  const IsogenyReport r = isogeny_report(h, 0, 1, nullptr);
  EXPECT_FALSE(r.isogeny_rational);
  EXPECT_EQ(r.delta1.field().degree(), 2);
  expect_roundtrip(r, isogeny_report_from_json);
  EXPECT_EQ(code_of([&] { map_report(h, DivisorInput{}, 0, 1, 0); }), ErrorCode::kNotRational);
}

TEST(Report, SelectionFailures) {
  EXPECT_EQ(code_of([] { select_subgroup(curve_from_json(read_json_file(data("curve101_no_subgroup.json"))), 0); }),
            ErrorCode::kNoTractableSubgroup);
  EXPECT_EQ(code_of([] { select_subgroup(curve_from_json(read_json_file(data("curve37.json"))), 1); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { isogeny_report(curve_from_json(read_json_file(data("curve101_not_rational.json"))), 0, 1,
                                        nullptr); }),
            ErrorCode::kNotRational);
}

TEST(Report, VerifyAndMapRoundTrip) {
  const HCurve h = curve_from_json(read_json_file(data("curve37.json")));
  const VerifyReport v = verify_report(h, 0, 1, VerifyOptions{4, 3, 2});
  EXPECT_TRUE(v.summary.ok());
  EXPECT_EQ(v.summary.fibers.size(), 12u);
  expect_roundtrip(v, verify_report_from_json);

  const DivisorInput d = divisor_from_json(
      Json::parse(R"({"points_plus":[["10","28"]],"points_minus":[["14","6"]]})"), h.field());
  const MapReport m = map_report(h, d, 0, 1, 5);
  EXPECT_EQ(m.image.degree(), 0);
  EXPECT_FALSE(m.image.is_zero());
  expect_roundtrip(m, map_report_from_json);
  // reproducible under the seed
  EXPECT_EQ(map_report(h, d, 0, 1, 5).image, m.image);
}

TEST(Report, SurveyAndExpectationRoundTrip) {
  SurveyConfig cfg;
  cfg.p = 101;
  cfg.samples = 30;
  cfg.seed = 3;
  const SurveyReport r{cfg, run_survey(cfg)};
  expect_roundtrip(r, survey_report_from_json);
  Json bad = to_json(r);
  bad["curves_with_success"] = 29;
  EXPECT_EQ(code_of([&] { survey_report_from_json(bad); }), ErrorCode::kParseError);

  const ExpectationReport e = expectation_report(parse_probability("1/4"));
  EXPECT_EQ(to_json(e)["decimal"], "0.1857");
  EXPECT_EQ(to_json(expectation_report(parse_probability("1/2")))["decimal"], "0.3113");
  expect_roundtrip(e, expectation_report_from_json);
  EXPECT_EQ(code_of([] { parse_probability("3/2"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_probability("x"); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace trigonal

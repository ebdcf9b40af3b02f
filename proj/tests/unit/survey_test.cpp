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

#include <cmath>
#include <cstdlib>

#include "trigonal/survey.hpp"
#include "trigonal/tractable.hpp"

namespace trigonal {
namespace {

TEST(Survey, RandomCurveIsSeededAndSquarefree) {
  const Field& f = make_extension(101, 1);
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    const HCurve h = random_curve(f, a);
    EXPECT_EQ(h, random_curve(f, b));
    EXPECT_TRUE(is_squarefree(h.f()));
  }
}

TEST(Survey, RejectionRateNearOneOverP) {
  const Field& f = make_extension(101, 1);
  Rng rng(1);
  long rejections = 0;
  const long n = 20000;
  for (long i = 0; i < n; ++i) random_curve(f, rng, &rejections);
  const double rate = static_cast<double>(rejections) / static_cast<double>(n + rejections);
  EXPECT_NEAR(rate, 1.0 / 101, 4 * std::sqrt(rate / (n + rejections)));
}

TEST(Survey, PrimeWithBits) {
  EXPECT_EQ(prime_with_bits(30), mpz_class(1073741789));
  EXPECT_EQ(prime_with_bits(8), mpz_class(251));
}

TEST(Survey, CsvRow) {
  CurveRecord r;
  r.trial = 7;
  r.pattern = {6, 1, 1};
  r.subgroups.resize(2);
  r.subgroups[0].trigonal_rational = true;
  r.subgroups[0].alpha_square = true;
  r.subgroups[1].alpha_square = true;
  EXPECT_EQ(csv_row(r), "7,6-1-1,2,1,1,1");
  EXPECT_STREQ(kCsvHeader, "trial,pattern,num_tractable,num_trig_rational,num_isog_rational,success");
}

TEST(Survey, DeterministicAcrossThreadCounts) {
  SurveyConfig cfg{101, 60, 42, SurveyDepth::kFull};
  setenv("TRIGONAL_THREADS", "1", 1);
  std::vector<std::string> rows1, rows3;
  const SurveyStats a = run_survey(cfg, [&](const CurveRecord& r) { rows1.push_back(csv_row(r)); });
  setenv("TRIGONAL_THREADS", "3", 1);
  const SurveyStats b = run_survey(cfg, [&](const CurveRecord& r) { rows3.push_back(csv_row(r)); });
  unsetenv("TRIGONAL_THREADS");
  EXPECT_TRUE(a == b);
  EXPECT_EQ(rows1, rows3);
  ASSERT_EQ(rows1.size(), 60u);
  EXPECT_EQ(rows1[0].substr(0, 2), "0,");
  cfg.seed = 43;
  EXPECT_FALSE(run_survey(cfg) == a);
}

TEST(Survey, PerCurveInvariants) {
  const Field& f = make_extension(1009, 1);
  for (long i = 0; i < 40; ++i) {
    const CurveRecord r = run_trial(f, i, 3, SurveyDepth::kFull);
    EXPECT_EQ(static_cast<long>(r.subgroups.size()), count_for_pattern(r.pattern));
    bool any = false;
    for (const auto& s : r.subgroups) {
      if (s.trigonal_rational) EXPECT_TRUE(s.discriminant_square);
      any = any || (s.trigonal_rational && s.alpha_square);
    }
    EXPECT_EQ(any, r.success());
  }
}

TEST(Survey, PatternHistogramMatchesLimitWeights) {
  SurveyConfig cfg{prime_with_bits(20), 3000, 9, SurveyDepth::kSubgroups};
  const SurveyStats st = run_survey(cfg);
  for (const auto& pat : partitions_of(8)) {
    const double w = pattern_weight(pat).get_d();
    const auto it = st.patterns.find(pattern_string(pat));
    const double seen = it == st.patterns.end() ? 0.0 : static_cast<double>(it->second) / cfg.samples;
    const double sigma = std::sqrt(w * (1 - w) / cfg.samples);
    EXPECT_LE(std::abs(seen - w), 3 * sigma + 1e-3) << pattern_string(pat);
  }
}

}  // namespace
}  // namespace trigonal

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
#include "trigonal/trigonal.hpp"

namespace trigonal {
namespace {

const Field& F37() { return make_extension(37, 1); }

HCurve reference_curve() { return HCurve(Poly::from_ints(F37(), {2, 29, 12, 33, 20, 15, 28, 1})); }

TrigonalMap reference_map() {
  const Field& f = F37();
  return {f.element(16), f.element(22), f.element(32), f.element(18)};
}

TEST(Trigonal, PluckerExamples) {
  const Field& f = F37();
  auto p = plucker_of_pair({Poly::from_ints(f, {0, 1}), 2});  // uv
  std::vector<long> expect{0, 0, 1, 0, 0, 0};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(p[i], f.element(expect[i]));
  p = plucker_of_pair({Poly::from_ints(f, {2, -3, 1}), 2});
  expect = {4, 6, 7, 1, -3, 2};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(p[i], f.element(expect[i]));
  EXPECT_TRUE((p[0] * p[3] + p[1] * p[4] + p[2] * p[5]).is_zero());
  EXPECT_THROW(plucker_of_pair({Poly::from_ints(f, {1, 2, 1}), 2}), Error);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    Poly q(f, {f.random(rng), f.random(rng), f.random(rng)});
    if (q.degree() < 1) continue;
    try {
      auto pp = plucker_of_pair({q, 2});
      EXPECT_TRUE(plucker_pairing(pp, pp).is_zero());
    } catch (const Error&) {
    }
  }
}

TEST(Trigonal, ReferenceSubgroupMap) {
  const HCurve h = reference_curve();
  const auto s = enumerate_tractable(h).at(0);
  const MMatrix m = build_M(s);
  EXPECT_EQ(m.rational.size(), 4u);
  const Fe disc = rationality_discriminant(m.alpha, m.beta);
  EXPECT_TRUE(is_square(disc));
  const auto r = trigonal_map_for(s, h);
  EXPECT_TRUE(r.chart.is_identity());
  EXPECT_TRUE(verify_trigonal(r.map, s));
  EXPECT_TRUE(verify_trigonal(reference_map(), s));
  ASSERT_TRUE(r.other_lambda);
  const auto r2 = trigonal_map_for(s, h, true);
  EXPECT_TRUE(verify_trigonal(r2.map, s));
  EXPECT_TRUE(r.map == reference_map() || r2.map == reference_map());
}

TEST(Trigonal, KernelAnnihilatesLinesMeetingAll) {
  const auto s = enumerate_tractable(reference_curve()).at(0);
  const MMatrix m = build_M(s);
  for (const auto& row : m.rows) {
    Fe a = row[0].field().zero(), b = a;
    for (int i = 0; i < 6; ++i) {
      a += row[i] * embed(m.alpha[i], row[0].field());
      b += row[i] * embed(m.beta[i], row[0].field());
    }
    EXPECT_TRUE(a.is_zero());
    EXPECT_TRUE(b.is_zero());
  }
  // permuting the factors leaves the reduced row space unchanged
  TractableSubgroup p = s;
  std::reverse(p.factors.begin(), p.factors.end());
  EXPECT_EQ(build_M(p).rational, m.rational);
}

TEST(Trigonal, DiscriminantBasisChange) {
  const Field& f = make_extension(101, 1);
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    Row a, b;
    for (int j = 0; j < 6; ++j) a.push_back(f.random(rng)), b.push_back(f.random(rng));
    Row ab;
    for (int j = 0; j < 6; ++j) ab.push_back(a[j] + b[j]);
    EXPECT_EQ(is_square(rationality_discriminant(a, b)), is_square(rationality_discriminant(a, ab)));
  }
  // isotropic alpha gives a perfect square
  Row a{f.one(), f.zero(), f.zero(), f.zero(), f.zero(), f.zero()};
  Row b;
  for (int j = 0; j < 6; ++j) b.push_back(f.random(rng));
  EXPECT_TRUE(is_square(rationality_discriminant(a, b)));
}

// Pairs {u, v} swapped by x -> (a x + b) / (c x - a) satisfy c q0 + a q1 - b q2 = 0.
bool three_pairs_share_involution(const TractableSubgroup& s) {
  const Field& k = s.field();
  std::vector<Row> rows;
  for (const auto& q : s.factors) {
    const Poly a = embed(q.affine, k);
    rows.push_back({a.coeff(0), a.coeff(1), a.coeff(2)});
  }
  for (size_t skip = 0; skip < rows.size(); ++skip) {
    Matrix m;
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != skip) m.push_back(rows[i]);
    if (rref(m).size() < 3) return true;
  }
  return false;
}

TEST(Trigonal, NotRationalIffDiscriminantNonSquare) {
  const Field& f = make_extension(101, 1);
  Rng rng(21);
  int rational = 0, irrational = 0, degenerate = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto pats = partitions_of(8);
    const auto& t = pats[rng() % pats.size()];
    if (count_for_pattern(t) == 0) continue;
    const HCurve h = random_curve_with_pattern(f, t, rng);
    for (const auto& s : enumerate_tractable(h)) {
      const MMatrix m = build_M(s);
      const bool sq = is_square(rationality_discriminant(m.alpha, m.beta));
      try {
        const auto r = trigonal_map_for(s, h);
        EXPECT_TRUE(sq);
        EXPECT_FALSE(three_pairs_share_involution(s));
        EXPECT_TRUE(verify_trigonal(r.map, r.subgroup));
        EXPECT_TRUE(r.map.N().is_monic());
        ++rational;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kNotRational) {
          EXPECT_FALSE(sq);
          ++irrational;
        } else if (e.code() == ErrorCode::kDegenerateConfiguration) {
          EXPECT_TRUE(sq);
          EXPECT_TRUE(three_pairs_share_involution(s));
          ++degenerate;
        } else {
          ADD_FAILURE() << e.what();
        }
      }
    }
  }
  EXPECT_GT(rational, 10);
  EXPECT_GT(irrational, 10);
}

TEST(Trigonal, WrongMapFails) {
  const auto s = enumerate_tractable(reference_curve()).at(0);
  const Field& f = F37();
  TrigonalMap g{f.zero(), f.zero(), f.zero(), f.zero()};  // x^3 / x^2
  EXPECT_FALSE(verify_trigonal(g, s));
}

TEST(Trigonal, SwappingRootsIsSymmetric) {
  // verify_trigonal sees unordered pairs; check by running over a pullback
  // that exchanges the roles of 0 and infinity.
  const HCurve h = reference_curve();
  const auto s = enumerate_tractable(h).at(0);
  const auto r = trigonal_map_for(s, h);
  const Field& f = F37();
  const Mobius flip{f.zero(), f.one(), f.one(), f.zero()};
  const TractableSubgroup t = pullback(pullback(s, flip), flip);
  EXPECT_TRUE(verify_trigonal(r.map, t));
}

}  // namespace
}  // namespace trigonal

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

#include "trigonal/construction.hpp"
#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {
namespace {

const Field& F37() { return make_extension(37, 1); }

HCurve reference_curve() { return HCurve(Poly::from_ints(F37(), {2, 29, 12, 33, 20, 15, 28, 1})); }

TrigonalMap reference_map() {
  const Field& f = F37();
  return {f.element(16), f.element(22), f.element(32), f.element(18)};
}

Poly T(std::vector<long> c) { return Poly::from_ints(F37(), c); }

// Points of X over t0 by interpolating sign choices of y over the roots of
// G(t0, x), all in k.
std::vector<XCoords> interpolated_points(const Fibration& fib, const Fe& t0, const Field& k) {
  const Poly gx = embed(fib.G.at_t(t0), k);
  const auto xs = roots(gx);
  std::vector<XCoords> out;
  if (xs.size() != 3) return out;
  std::vector<Fe> ys;
  for (const auto& x : xs) {
    auto y = sqrt(embed(fib.curve.f(), k).eval(x));
    if (!y || y->is_zero()) return out;
    ys.push_back(*y);
  }
  for (int signs = 0; signs < 4; ++signs) {  // fix the sign of y_0
    Poly b(k);
    for (int i = 0; i < 3; ++i) {
      Fe yi = ys[i];
      if (i > 0 && (signs >> (i - 1) & 1)) yi = -yi;
      Poly l = Poly::constant(yi);
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        l = l * (Poly::x(k) - Poly::constant(xs[j])) * (xs[i] - xs[j]).inverse();
      }
      b += l;
    }
    const Fe b0 = b.coeff(0), b1 = b.coeff(1), b2 = b.coeff(2);
    out.push_back({b0 * b0, b0 * b1, b0 * b2, b1 * b1, b1 * b2, b2 * b2});
  }
  return out;
}

TEST(Construction, ReferenceFibration) {
  const Fibration fib = build_fibration(reference_map(), reference_curve());
  EXPECT_EQ(fib.g2, T({0, -1}));
  EXPECT_EQ(fib.g1, T({16, -32}));
  EXPECT_EQ(fib.g0, T({22, -18}));
  EXPECT_EQ(fib.G.to_string(), BiPoly({T({22, -18}), T({16, -32}), T({0, -1}), T({1})}).to_string());
  const Poly d1 = T({3, 33, 8, 35});
  EXPECT_EQ(fib.s * F37().element(64), d1 * d1);
  EXPECT_TRUE(isogeny_is_rational(fib));
}

TEST(Construction, ReferenceXModel) {
  const XModel x = build_X(build_fibration(reference_map(), reference_curve()));
  const Poly z(F37()), one = T({1}), two = T({2});
  // (18t^2 + 15t)b22 + (36t + 30)b12 + b00 + 19t^5 + 10t^4 + 12t^3 + 7t^2 + t + 30
  const std::array<Poly, 7> c0 = {T({30, 1, 7, 12, 10, 19}), one, z, z, z, T({30, 36}), T({0, 15, 18})};
  const std::array<Poly, 7> c1 = {T({17, 19, 23, 15, 26, 5}), z, two, z, z, T({5, 27}), T({15, 2, 32})};
  const std::array<Poly, 7> c2 = {T({18, 21, 13, 7, 29, 36}), z, z, two, one, T({0, 2}), T({21, 32, 1})};
  for (int j = 0; j < 7; ++j) {
    EXPECT_EQ(x.c[0][j], c0[j]) << j;
    EXPECT_EQ(x.c[1][j], c1[j]) << j;
    EXPECT_EQ(x.c[2][j], c2[j]) << j;
  }
}

TEST(Construction, ReferenceDeltas) {
  const PlaneModel m = build_plane_model(build_fibration(reference_map(), reference_curve()));
  EXPECT_TRUE(m.rational);
  EXPECT_EQ(m.delta0, T({16, 15, 31, 2, 9, 8, 16, 6, 33, 20, 27}));
  EXPECT_EQ(m.delta2, T({16, 12, 20, 6, 14, 29, 18, 20}));
  EXPECT_EQ(m.delta4, T({0, 21, 13, 36, 27}));
  const Poly d1 = T({3, 33, 8, 35});
  EXPECT_TRUE(m.delta1 == d1 || m.delta1 == -d1);
}

TEST(Construction, SMatchesProductOverFiber) {
  const Fibration fib = build_fibration(reference_map(), reference_curve());
  const Field& k = make_extension(37, 6);
  for (long t = 0; t < 37; ++t) {
    const Fe t0 = F37().element(t);
    const auto xs = roots(embed(fib.G.at_t(t0), k));
    if (xs.size() != 3) continue;
    Fe prod = k.one();
    for (const auto& x : xs) prod *= embed(fib.curve.f(), k).eval(x);
    EXPECT_EQ(embed(fib.s.eval(t0), k), prod) << t;
  }
}

TEST(Construction, QuarticIdentityAndRho) {
  const Correspondence c = build_correspondence(build_fibration(reference_map(), reference_curve()));
  const Field& k = make_extension(37, 12);
  int checked = 0;
  for (long t = 0; t < 37; ++t) {
    const Fe t0 = F37().element(t);
    if (!c.fib.unramified(t0)) continue;
    for (const auto& b : interpolated_points(c.fib, t0, k)) {
      EXPECT_TRUE(c.x.contains(t0, b));
      EXPECT_TRUE(c.plane.residual(t0, b[kB22]).is_zero());
      const Fe r = c.rho(t0, b);
      EXPECT_EQ(r * r, b[kB22]);
      ++checked;
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Construction, ExcludedLocus) {
  const Fibration fib = build_fibration(reference_map(), reference_curve());
  const Field& k = make_extension(37, 6);
  for (long t = 0; t < 37; ++t) {
    const Fe t0 = F37().element(t);
    const Poly gx = fib.G.at_t(t0);
    if (fib.excluded.eval(t0).is_zero()) continue;
    EXPECT_TRUE(is_squarefree(gx)) << t;
    EXPECT_EQ(roots(embed(gx, k)).size(), 3u);
  }
}

struct Sample {
  HCurve h;
  TrigonalResult tr;
};

std::vector<Sample> rational_samples(const Field& f, int want, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sample> out;
  const auto pats = partitions_of(8);
  while (static_cast<int>(out.size()) < want) {
    const auto& pat = pats[rng() % pats.size()];
    if (count_for_pattern(pat) == 0) continue;
    const HCurve h = random_curve_with_pattern(f, pat, rng);
    for (const auto& s : enumerate_tractable(h)) {
      try {
        out.push_back({h, trigonal_map_for(s, h)});
        break;
      } catch (const Error&) {
      }
    }
  }
  return out;
}

TEST(Construction, SquareRootAlwaysExists) {
  for (const auto& smp : rational_samples(make_extension(101, 1), 60, 7)) {
    EXPECT_NO_THROW(build_fibration(smp.tr.map, smp.tr.curve));
  }
}

TEST(Construction, TwistAntisymmetry) {
  const Field& f = make_extension(101, 1);
  for (const auto& smp : rational_samples(f, 40, 11)) {
    const HCurve& h = smp.tr.curve;
    const Fibration a = build_fibration(smp.tr.map, h);
    const Fibration b = build_fibration(smp.tr.map, h.twist(f.nonresidue()));
    const Fe c = f.nonresidue();
    EXPECT_EQ(b.s, a.s * (c * c * c));
    EXPECT_NE(isogeny_is_rational(a), isogeny_is_rational(b));
  }
}

TEST(Construction, NonRationalDeltaOverQuadratic) {
  const Fibration fib = build_fibration(reference_map(), reference_curve().twist(F37().nonresidue()));
  EXPECT_FALSE(isogeny_is_rational(fib));
  const PlaneModel m = build_plane_model(fib);
  EXPECT_FALSE(m.rational);
  EXPECT_EQ(m.delta1.field().degree(), 2);
  EXPECT_EQ(m.delta1 * m.delta1, embed(fib.s, m.delta1.field()) * make_extension(37, 2).element(64));
}

}  // namespace
}  // namespace trigonal

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

#include "trigonal/trigonal.hpp"

#include <algorithm>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {

Plucker plucker_of_pair(const BinaryForm& q) {
  if (q.degree != 2) throw Error(ErrorCode::kDegeneratePair, "expected a quadratic form");
  const Fe a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
  if ((b * b - q.field().element(4) * a * c).is_zero())
    throw Error(ErrorCode::kDegeneratePair, "quadratic form is a square");
  return {c * c, -c * b, b * b - a * c, a * a, a * b, a * c};
}

Fe plucker_pairing(const Plucker& x, const Plucker& y) {
  Fe r = x[0].field().zero();
  for (int i = 0; i < 6; ++i) r += x[i] * y[(i + 3) % 6];
  return r;
}

Fe plucker_pairing(const Row& x, const Row& y) {
  Fe r = x[0].field().zero();
  for (size_t i = 0; i < 6; ++i) r += x[i] * y[(i + 3) % 6];
  return r;
}

MMatrix build_M(const TractableSubgroup& s) {
  MMatrix out;
  for (const auto& q : s.factors) {
    const Fe a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    out.rows.push_back({a * a, a * b, a * c, c * c, -c * b, b * b - a * c});
  }
  Matrix m = out.rows;
  rref(m);
  if (m.size() != 4)
    throw Error(ErrorCode::kDegenerateConfiguration, "M has rank " + std::to_string(m.size()));
  const Field& fp = s.field().prime_field();
  for (auto& row : m) {
    Row r;
    for (const auto& x : row) {
      if (!x.in_prime_field())
        throw Error(ErrorCode::kDegenerateConfiguration, "row space of M is not Galois-stable");
      r.push_back(fp.element(x.coeff(0)));
    }
    out.rational.push_back(std::move(r));
  }
  Matrix ker = kernel(out.rational, fp, 6);
  if (ker.size() != 2)
    throw Error(ErrorCode::kDegenerateConfiguration, "kernel of M has dimension " + std::to_string(ker.size()));
  out.alpha = ker[0];
  out.beta = ker[1];
  return out;
}

Fe rationality_discriminant(const Row& alpha, const Row& beta) {
  const Fe ab = plucker_pairing(alpha, beta);
  return ab * ab - plucker_pairing(alpha, alpha) * plucker_pairing(beta, beta);
}

Poly TrigonalMap::N() const {
  const Field& f = n1.field();
  return Poly(f, {n0, n1, f.zero(), f.one()});
}

Poly TrigonalMap::D() const {
  const Field& f = d1.field();
  return Poly(f, {d0, d1, f.one()});
}

TractableSubgroup pullback(const TractableSubgroup& s, const Mobius& m) {
  TractableSubgroup out;
  const Field& k = s.field();
  const Mobius mk = m.embedded(k);
  for (const auto& q : s.factors) out.factors.push_back(pullback(q, mk).normalized());
  std::sort(out.factors.begin(), out.factors.end(),
            [](const BinaryForm& a, const BinaryForm& b) { return canonical_less(a, b); });
  out.rational = s.rational;
  return out;
}

namespace {

struct Lambda {
  Fe value;
  std::optional<Fe> other;
  bool swapped = false;
};

// Roots of Q(alpha + lambda beta) = 0 where Q(v) = v0 v3 + v1 v4 + v2 v5.
Lambda solve_lambda(const Row& alpha, const Row& beta, const Fe& disc) {
  const Field& f = disc.field();
  const Fe half = f.element(2).inverse();
  const Fe a = plucker_pairing(beta, beta) * half;
  const Fe b = plucker_pairing(alpha, beta);
  const Fe c = plucker_pairing(alpha, alpha) * half;
  if (!a.is_zero()) {
    const Fe r = *sqrt(disc);
    const Fe inv = (a + a).inverse();
    Fe l1 = (-b + r) * inv, l2 = (-b - r) * inv;
    if (canonical_less(l2, l1)) std::swap(l1, l2);
    Lambda out{l1, {}};
    if (l2 != l1) out.other = l2;
    return out;
  }
  if (!b.is_zero()) return {-c / b, {}};
  if (!c.is_zero()) return {f.zero(), {}, true};
  throw Error(ErrorCode::kDegenerate, "the whole pencil lies on the Grassmannian");
}

enum class LineStatus { kOk, kBadPivots, kBasePoint };

// Rows (1,0,n1,n0), (0,1,d1,d0) of the row space of M_gamma.
LineStatus line_from_gamma(const Row& g, TrigonalMap& out) {
  const Field& f = g[0].field();
  const Fe z = f.zero();
  Matrix m = {{z, -g[3], -g[4], -g[5]},
              {g[3], z, -g[2], g[1]},
              {g[4], g[2], z, -g[0]},
              {g[5], -g[1], g[0], z}};
  const auto pivots = rref(m);
  if (pivots.size() != 2) throw Error(ErrorCode::kDegenerate, "M_gamma does not have rank 2");
  if (pivots[0] != 0 || pivots[1] != 1) return LineStatus::kBadPivots;
  out = {m[0][2], m[0][3], m[1][2], m[1][3]};
  // the line meets the twisted cubic: the map has a base point
  if (gcd(out.N(), out.D()).degree() > 0) return LineStatus::kBasePoint;
  return LineStatus::kOk;
}

std::uint64_t curve_seed(const HCurve& h) {
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (const auto& c : h.f().coeffs()) {
    x ^= c.coeff(0).get_ui() + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
  }
  return x;
}

}  // namespace

TrigonalResult trigonal_map_for(const TractableSubgroup& s, const HCurve& h, bool other_root) {
  const Field& fp = h.field();
  Rng rng(curve_seed(h));
  Mobius chart = Mobius::identity(fp);
  HCurve curve = h;
  TractableSubgroup sub = s;
  for (int attempt = 1; attempt <= 8; ++attempt) {
    if (attempt > 1) {
      do {
        chart = {fp.random(rng), fp.random(rng), fp.random(rng), fp.random(rng)};
      } while (chart.det().is_zero());
      curve = pullback(h, chart);
      sub = pullback(s, chart);
      sub.scale = curve.f().lead();
    }
    const MMatrix m = build_M(sub);
    const Fe disc = rationality_discriminant(m.alpha, m.beta);
    if (!is_square(disc)) throw Error(ErrorCode::kNotRational, "discriminant is not a square");
    Row alpha = m.alpha, beta = m.beta;
    Lambda lam = solve_lambda(alpha, beta, disc);
    if (lam.swapped) std::swap(alpha, beta);
    std::vector<Fe> candidates{lam.value};
    if (lam.other) candidates.push_back(*lam.other);
    if (other_root && candidates.size() == 2) std::swap(candidates[0], candidates[1]);
    TrigonalMap map;
    int base_points = 0;
    bool bad_pivots = false;
    size_t chosen = 0;
    for (; chosen < candidates.size(); ++chosen) {
      Row gamma;
      for (size_t i = 0; i < 6; ++i) gamma.push_back(alpha[i] + candidates[chosen] * beta[i]);
      const LineStatus st = line_from_gamma(gamma, map);
      if (st == LineStatus::kOk) break;
      if (st == LineStatus::kBasePoint) ++base_points;
      else bad_pivots = true;
      if (st == LineStatus::kBadPivots) break;
    }
    if (chosen == candidates.size() && base_points == static_cast<int>(candidates.size())) {
      throw Error(ErrorCode::kDegenerateConfiguration,
                  "every line meeting the four secants meets the rational normal curve");
    }
    if (bad_pivots || chosen == candidates.size()) continue;
    const Fe lambda = candidates[chosen];
    std::optional<Fe> other;
    if (candidates.size() == 2) other = candidates[1 - chosen];
    TrigonalResult out;
    out.map = map;
    out.lambda = lambda;
    out.other_lambda = other;
    out.discriminant = disc;
    out.double_root = disc.is_zero();
    out.alpha = alpha;
    out.beta = beta;
    out.chart = chart;
    out.curve = curve;
    out.subgroup = sub;
    out.attempts = attempt;
    return out;
  }
  throw Error(ErrorCode::kDegenerate, "no chart gives the normal form after 8 attempts");
}

bool verify_trigonal(const TrigonalMap& g, const TractableSubgroup& s) {
  const Field& k = s.field();
  const Field& k2 = make_extension(k.characteristic(), 2 * k.degree());
  const Poly n = embed(g.N(), k2), d = embed(g.D(), k2);
  for (const auto& q : s.factors) {
    const Poly qa = embed(q.affine, k2);
    std::vector<std::optional<Fe>> pts;
    if (qa.degree() == 2) {
      auto rs = roots(qa);
      if (rs.size() != 2) return false;
      pts = {rs[0], rs[1]};
    } else if (qa.degree() == 1) {
      pts = {std::nullopt, -qa.coeff(0) / qa.coeff(1)};
    } else {
      return false;
    }
    if (!pts[0]) {
      if (!d.eval(*pts[1]).is_zero()) return false;
      continue;
    }
    const Fe x1 = *pts[0], x2 = *pts[1];
    if (n.eval(x1) * d.eval(x2) != n.eval(x2) * d.eval(x1)) return false;
  }
  return true;
}

}  // namespace trigonal

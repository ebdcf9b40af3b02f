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

#include "trigonal/construction.hpp"

#include <numeric>
#include <sstream>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {

namespace {

const Field& common_field(const Field& a, const Field& b) {
  if (&a == &b) return a;
  return make_extension(a.characteristic(), std::lcm(a.degree(), b.degree()));
}

Fe lift(const Fe& a, const Field& k) { return &a.field() == &k ? a : embed(a, k); }

Poly cst(const Field& k, long v) { return Poly::constant(k.element(v)); }

}  // namespace

Poly s_polynomial(const Poly& f0, const Poly& f1, const Poly& f2,
                  const Poly& g0, const Poly& g1, const Poly& g2) {
  const Field& k = f0.field();
  const Poly two = cst(k, 2), three = cst(k, 3);
  return f0 * f0 * f0 - f0 * f0 * f1 * g2 - two * f0 * f0 * f2 * g1 + f0 * f0 * f2 * g2 * g2 +
         f0 * f1 * f1 * g1 + three * f0 * f1 * f2 * g0 - f0 * f1 * f2 * g1 * g2 -
         two * f0 * f2 * f2 * g0 * g2 + f0 * f2 * f2 * g1 * g1 - f1 * f1 * f1 * g0 +
         f1 * f1 * f2 * g0 * g2 - f1 * f2 * f2 * g0 * g1 + f2 * f2 * f2 * g0 * g0;
}

namespace {

Poly delta4_of(const Poly& g0, const Poly& g1, const Poly& g2) {
  const Field& k = g0.field();
  return cst(k, -27) * g0 * g0 + cst(k, 18) * g0 * g1 * g2 - cst(k, 4) * g0 * g2 * g2 * g2 -
         cst(k, 4) * g1 * g1 * g1 + g1 * g1 * g2 * g2;
}

}  // namespace

bool Fibration::unramified(const Fe& t0) const {
  return !excluded.eval(t0).is_zero() && !s.eval(t0).is_zero();
}

Fibration build_fibration(const TrigonalMap& g, const HCurve& h) {
  const Field& k = h.field();
  const Poly t = Poly::x(k);
  Fibration fib;
  fib.curve = h;
  fib.map = g;
  fib.g2 = -t;
  fib.g1 = Poly::constant(g.n1) - Poly::constant(g.d1) * t;
  fib.g0 = Poly::constant(g.n0) - Poly::constant(g.d0) * t;
  fib.G = BiPoly({fib.g0, fib.g1, fib.g2, Poly::constant(k.one())});
  const auto f = reduce_mod_cubic(h.f(), fib.G);
  fib.f0 = f[0];
  fib.f1 = f[1];
  fib.f2 = f[2];
  fib.s = s_polynomial(fib.f0, fib.f1, fib.f2, fib.g0, fib.g1, fib.g2);
  if (fib.s.is_zero()) throw Error(ErrorCode::kSquareRootObstruction, "s vanishes identically");
  const auto root = exact_square_root(fib.s);
  if (!root) throw Error(ErrorCode::kSquareRootObstruction, "s is not a constant times a square");
  fib.alpha = root->first;
  fib.r = root->second;
  fib.excluded = (fib.f1 * fib.f1 - cst(k, 4) * fib.f2 * fib.f0) *
                 -delta4_of(fib.g0, fib.g1, fib.g2);
  return fib;
}

bool isogeny_is_rational(const Fibration& fib) { return is_square(fib.alpha); }

std::array<Fe, 3> XModel::linear_values(const Fe& t, const XCoords& b) const {
  std::array<Fe, 3> out;
  for (size_t i = 0; i < 3; ++i) {
    const Field& k = common_field(t.field(), b[0].field());
    Fe acc = lift(c[i][0].eval(lift(t, k)), k);
    for (size_t j = 0; j < 6; ++j) acc += lift(c[i][j + 1].eval(lift(t, k)), k) * lift(b[j], k);
    out[i] = acc;
  }
  return out;
}

std::array<Fe, 6> XModel::quadric_values(const XCoords& b) {
  return {b[kB01] * b[kB01] - b[kB00] * b[kB11], b[kB01] * b[kB02] - b[kB00] * b[kB12],
          b[kB02] * b[kB02] - b[kB00] * b[kB22], b[kB02] * b[kB11] - b[kB01] * b[kB12],
          b[kB02] * b[kB12] - b[kB01] * b[kB22], b[kB12] * b[kB12] - b[kB11] * b[kB22]};
}

bool XModel::contains(const Fe& t, const XCoords& b) const {
  for (const auto& v : linear_values(t, b))
    if (!v.is_zero()) return false;
  for (const auto& v : quadric_values(b))
    if (!v.is_zero()) return false;
  return true;
}

std::string XModel::equation(int i) const {
  static const char* names[] = {"b00", "b01", "b02", "b11", "b12", "b22"};
  std::ostringstream os;
  bool first = true;
  for (int j = 6; j >= 0; --j) {
    const Poly& p = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << p.to_string("t");
    } else if (p.degree() == 0 && p.coeff(0).is_one()) {
      os << names[j - 1];
    } else {
      os << "(" << p.to_string("t") << ")*" << names[j - 1];
    }
  }
  if (first) os << "0";
  return os.str();
}

XModel build_X(const Fibration& fib) {
  const Field& k = fib.curve.field();
  const Poly zero(k), one = cst(k, 1), two = cst(k, 2);
  const Poly &g0 = fib.g0, &g1 = fib.g1, &g2 = fib.g2;
  XModel x;
  //          const     b00   b01  b02  b11  b12           b22
  x.c[0] = {-fib.f0, one, zero, zero, zero, -two * g0, g2 * g0};
  x.c[1] = {-fib.f1, zero, two, zero, zero, -two * g1, g2 * g1 - g0};
  x.c[2] = {-fib.f2, zero, zero, two, one, -two * g2, g2 * g2 - g1};
  return x;
}

Fe PlaneModel::residual(const Fe& t, const Fe& b22) const {
  const Field& k = common_field(common_field(t.field(), b22.field()), delta1.field());
  const Fe tt = lift(t, k), b = lift(b22, k);
  const Fe q = delta4.eval(tt) * b * b + delta2.eval(tt) * b + delta0.eval(tt);
  const Fe d1 = delta1.eval(tt);
  return q * q - d1 * d1 * b;
}

PlaneModel build_plane_model(const Fibration& fib) {
  const Field& k = fib.curve.field();
  const Poly &f0 = fib.f0, &f1 = fib.f1, &f2 = fib.f2;
  const Poly &g0 = fib.g0, &g1 = fib.g1, &g2 = fib.g2;
  PlaneModel m;
  m.delta4 = delta4_of(g0, g1, g2);
  m.delta2 = cst(k, 12) * f0 * g1 - cst(k, 4) * f0 * g2 * g2 - cst(k, 18) * f1 * g0 +
             cst(k, 2) * f1 * g1 * g2 + cst(k, 12) * f2 * g0 * g2 - cst(k, 4) * f2 * g1 * g1;
  m.delta0 = f1 * f1 - cst(k, 4) * f0 * f2;
  m.rational = is_square(fib.alpha);
  if (m.rational) {
    m.delta1 = (k.element(8) * *sqrt(fib.alpha)) * fib.r;
  } else {
    const Field& k2 = make_extension(k.characteristic(), 2 * k.degree());
    const Fe a = embed(fib.alpha, k2);
    m.delta1 = (k2.element(8) * *sqrt(a)) * embed(fib.r, k2);
  }
  return m;
}

Fe Correspondence::rho(const Fe& t, const XCoords& b) const {
  const Field& k = common_field(common_field(t.field(), b[kB22].field()), plane.delta1.field());
  const Fe tt = lift(t, k), b22 = lift(b[kB22], k);
  const Fe num = plane.delta4.eval(tt) * b22 * b22 + plane.delta2.eval(tt) * b22 +
                 plane.delta0.eval(tt);
  const Fe den = plane.delta1.eval(tt);
  if (den.is_zero()) throw Error(ErrorCode::kRamifiedFiber, "delta1 vanishes at t");
  const Fe r = num / den;
  return sign > 0 ? r : -r;
}

Correspondence build_correspondence(const Fibration& fib, int sign) {
  Correspondence c;
  c.fib = fib;
  c.x = build_X(fib);
  c.plane = build_plane_model(fib);
  c.sign = sign >= 0 ? 1 : -1;
  return c;
}

Correspondence construct(const TrigonalResult& tr, int sign) {
  return build_correspondence(build_fibration(tr.map, tr.curve), sign);
}

}  // namespace trigonal

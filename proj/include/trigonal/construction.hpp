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

// The trigonal construction: from a trigonal map g = N/D on H, the fibration
// G(t, x) = N(x) - t D(x), the affine model of X over the unramified locus,
// the plane relation satisfied by b22, and the correspondence R.

#ifndef TRIGONAL_CONSTRUCTION_HPP_
#define TRIGONAL_CONSTRUCTION_HPP_

#include <array>
#include <string>

#include "trigonal/hyperelliptic.hpp"
#include "trigonal/trigonal.hpp"

namespace trigonal {

struct Fibration {
  HCurve curve;
  TrigonalMap map;
  Poly g0, g1, g2;  // in t
  BiPoly G;
  Poly f0, f1, f2;  // F = f0 + f1 x + f2 x^2 mod G
  Poly s;
  Fe alpha;  // lead(s)
  Poly r;    // monic, s = alpha r^2
  /// (f1^2 - 4 f2 f0) * disc_x(G): t0 is excluded where this vanishes.
  Poly excluded;

  /// Not excluded, and no Weierstrass point in the fiber (s(t0) != 0).
  bool unramified(const Fe& t0) const;
};

/// Throws SquareRootObstruction when s is not alpha times a square.
Fibration build_fibration(const TrigonalMap& g, const HCurve& h);

/// The 13-term expression for s in terms of the f_i and g_i.
Poly s_polynomial(const Poly& f0, const Poly& f1, const Poly& f2,
                  const Poly& g0, const Poly& g1, const Poly& g2);

bool isogeny_is_rational(const Fibration& fib);

/// Coordinates on the ambient affine space, in this order.
enum XCoord { kB00 = 0, kB01, kB02, kB11, kB12, kB22 };
using XCoords = std::array<Fe, 6>;

struct XModel {
  /// c[i][0] is the constant term, c[i][1 + j] the coefficient of coordinate j.
  std::array<std::array<Poly, 7>, 3> c;

  std::array<Fe, 3> linear_values(const Fe& t, const XCoords& b) const;
  /// b01^2 - b00 b11, b01 b02 - b00 b12, b02^2 - b00 b22,
  /// b02 b11 - b01 b12, b02 b12 - b01 b22, b12^2 - b11 b22.
  static std::array<Fe, 6> quadric_values(const XCoords& b);
  bool contains(const Fe& t, const XCoords& b) const;
  std::string equation(int i) const;
};

XModel build_X(const Fibration& fib);

/// (delta4 b22^2 + delta2 b22 + delta0)^2 = delta1^2 b22 on X.
struct PlaneModel {
  Poly delta0, delta2, delta4;  // over the base field
  Poly delta1;                  // 8 sqrt(s); over F_{p^2} when not rational
  bool rational = true;

  /// Left side minus right side at (t, b22), in the larger of the fields.
  Fe residual(const Fe& t, const Fe& b22) const;
};

PlaneModel build_plane_model(const Fibration& fib);

struct Correspondence {
  Fibration fib;
  XModel x;
  PlaneModel plane;
  int sign = 1;  // +1 for R, -1 for R'

  /// sign * (delta4 b22^2 + delta2 b22 + delta0) / delta1, at a point of X.
  Fe rho(const Fe& t, const XCoords& b) const;
};

Correspondence build_correspondence(const Fibration& fib, int sign = 1);

/// The full construction from a trigonal map result.
Correspondence construct(const TrigonalResult& tr, int sign = 1);

}  // namespace trigonal

#endif  // TRIGONAL_CONSTRUCTION_HPP_

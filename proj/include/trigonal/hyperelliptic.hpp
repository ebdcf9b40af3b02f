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

// Genus-3 hyperelliptic curves y^2 = F(x), deg F in {7, 8}, with Mumford
// divisor classes on odd-degree models.

#ifndef TRIGONAL_HYPERELLIPTIC_HPP_
#define TRIGONAL_HYPERELLIPTIC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "trigonal/poly.hpp"

namespace trigonal {

struct Point {
  Fe x, y;
};

/// x_target = (a x_source + b) / (c x_source + d).
struct Mobius {
  Fe a, b, c, d;

  static Mobius identity(const Field& field);
  const Field& field() const { return a.field(); }
  Fe det() const { return a * d - b * c; }
  bool is_identity() const;
  /// (this after other): x -> this(other(x)).
  Mobius compose(const Mobius& other) const;
  Mobius inverse() const;
  Mobius embedded(const Field& target) const;
  /// Image of a finite x; nullopt when it maps to infinity.
  std::optional<Fe> apply(const Fe& x) const;
  friend bool operator==(const Mobius&, const Mobius&) = default;
};

class HCurve {
 public:
  HCurve() = default;
  /// Validates degree and squarefreeness.
  explicit HCurve(Poly f);
  static HCurve from_form(const BinaryForm& form);

  const Field& field() const { return f_.field(); }
  const Poly& f() const { return f_; }
  int degree() const { return f_.degree(); }
  /// Homogenization of degree 8.
  BinaryForm form() const { return {f_, 8}; }
  bool contains(const Point& pt) const;
  HCurve twist(const Fe& c) const;
  HCurve embedded(const Field& target) const;
  std::string to_string() const;

  friend bool operator==(const HCurve& a, const HCurve& b) { return a.f_ == b.f_; }

 private:
  Poly f_;
};

/// F_source(u, v) = F_target(a u + b v, c u + d v).
BinaryForm pullback(const BinaryForm& form, const Mobius& m);
/// The curve whose x-coordinate is the source of m.
HCurve pullback(const HCurve& target, const Mobius& m);

/// Point on pullback(target, m) above a point on target; nullopt if the
/// point maps to infinity.
std::optional<Point> pull_point(const Point& pt, const Mobius& m);
/// Point on target from a point on pullback(target, m).
std::optional<Point> push_point(const Point& pt, const Mobius& m);

/// Mumford representation (a(x), y - b(x)); a monic, deg b < deg a.
struct Mumford {
  Poly a, b;
  bool is_identity() const { return a.degree() == 0; }
  std::string to_string() const;
  friend bool operator==(const Mumford& x, const Mumford& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Mumford& x, const Mumford& y) { return !(x == y); }
};
using DivisorClass = Mumford;

/// Ideal (a, y - b) on target expressed in source coordinates of m.
Mumford pull_ideal(const Mumford& d, const Mobius& m);

/// Odd model of a curve over a field K containing a Weierstrass point.
struct OddModel {
  HCurve original;  // over F_p
  HCurve odd;       // degree 7, over K
  Mobius chart;     // x_original = chart(x_odd), over K
  const Field& field() const { return odd.field(); }
};

/// Uses the canonically smallest K-rational root of F (identity when
/// deg F = 7). K defaults to the curve's own field.
OddModel to_odd_model(const HCurve& h, const Field* k = nullptr);

// Cantor arithmetic on an odd-degree model.
Mumford identity(const HCurve& odd);
bool is_valid(const HCurve& odd, const Mumford& d);
Mumford negate(const Mumford& d);
Mumford reduce(const HCurve& odd, Mumford d);
Mumford cantor_add(const HCurve& odd, const Mumford& d1, const Mumford& d2);
Mumford cantor_mul(const HCurve& odd, const Mumford& d, const mpz_class& n);
/// Coefficientwise Frobenius; valid when the model is defined over F_p.
Mumford frobenius(const Mumford& d, int times = 1);
Mumford embed(const Mumford& d, const Field& target);
Mumford restrict_to(const Mumford& d, const Field& target);

/// [P - inf].
Mumford point_class(const Point& pt);
/// Sum (P) - Sum (Q) for equal counts of affine points.
Mumford class_from_points(const HCurve& odd, const std::vector<Point>& plus,
                          const std::vector<Point>& minus);
/// Sum of three random affine points minus 3 inf.
Mumford random_class(const HCurve& odd, Rng& rng);
std::optional<Point> random_point(const HCurve& curve, Rng& rng);

/// Galois trace sum_{i < m} sigma^i(D) for D over F_{p^m} on a model over F_p.
Mumford galois_trace(const HCurve& odd_over_ext, const Mumford& d);

/// The class [(W') - (W'')] for a quadratic factor q of F over q's field,
/// on the given odd model (whose field must contain q's field).
Mumford two_torsion_from_pair(const OddModel& model, const BinaryForm& q);

/// #H(F_{p^k}) by enumeration; TooLarge above 2^30 elements.
mpz_class count_points(const HCurve& h, int k);
/// L(T) coefficients, ascending (7 entries).
std::vector<mpz_class> l_polynomial(const HCurve& h);
std::vector<mpz_class> l_polynomial_from_counts(const mpz_class& q, const mpz_class& n1,
                                                const mpz_class& n2, const mpz_class& n3);

/// Worker count from TRIGONAL_THREADS, else hardware concurrency.
unsigned worker_count();

}  // namespace trigonal

#endif  // TRIGONAL_HYPERELLIPTIC_HPP_

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

// Univariate polynomials over a finite field, binary forms, and bivariate
// polynomials in (t, x) as needed by the trigonal fibration.

#ifndef TRIGONAL_POLY_HPP_
#define TRIGONAL_POLY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/field.hpp"

namespace trigonal {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<Fe> coeffs);

  static Poly constant(const Fe& c);
  static Poly x(const Field& field);
  /// c * x^n
  static Poly monomial(const Fe& c, int n);
  /// Integer coefficients, ascending.
  static Poly from_ints(const Field& field, const std::vector<long>& coeffs);

  const Field& field() const { return *field_; }
  bool valid() const { return field_ != nullptr; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Fe coeff(int i) const;
  Fe lead() const { return coeff(degree()); }
  const std::vector<Fe>& coeffs() const { return c_; }
  void set_coeff(int i, const Fe& value);

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Fe& rhs);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Fe& b) { return a *= b; }
  friend Poly operator*(const Fe& b, Poly a) { return a *= b; }

  Poly monic() const;
  Fe eval(const Fe& x) const;
  Poly derivative() const;
  Poly shifted(int n) const;  // x^n * self
  /// Coefficientwise Frobenius a -> a^p.
  Poly frobenius(int times = 1) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  const Field* field_ = nullptr;
  std::vector<Fe> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << a.to_string(); }

/// Degree first, then coefficients from the top using canonical_less.
bool canonical_less(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
struct Xgcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws if not coprime.
Poly invmod(const Poly& a, const Poly& m);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);
/// f(g) mod m.
Poly compose_mod(const Poly& f, const Poly& g, const Poly& m);
Poly pow(const Poly& base, unsigned e);

bool is_squarefree(const Poly& f);

struct Factorization {
  Fe unit;
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted
  Poly product() const;
  /// Degrees with multiplicity, descending.
  std::vector<int> degree_pattern() const;
};

/// Complete factorization into monic irreducibles.
Factorization factorize(const Poly& f);
/// Squarefree monic input; products of irreducible factors of equal degree.
std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f);
/// Squarefree monic input whose irreducible factors all have degree d.
std::vector<Poly> equal_degree(const Poly& f, int d);
/// Distinct roots in f's field, sorted canonically.
std::vector<Fe> roots(const Poly& f);

/// s = alpha * r^2 with alpha = lead(s), r monic.
std::optional<std::pair<Fe, Poly>> exact_square_root(const Poly& s);

/// Embed every coefficient into a larger field.
Poly embed(const Poly& f, const Field& target);
/// Restrict every coefficient to a subfield; throws if impossible.
Poly restrict_to(const Poly& f, const Field& target);

/// v^degree * P(u/v) with deg P <= degree.
struct BinaryForm {
  Poly affine;
  int degree = 0;

  static BinaryForm v_power(const Field& field, int n);
  const Field& field() const { return affine.field(); }
  /// Multiplicity of the factor v.
  int v_multiplicity() const { return degree - affine.degree(); }
  /// Coefficient of u^i v^(degree - i).
  Fe coeff(int i) const { return affine.coeff(i); }
  /// Scale so that the affine part is monic (or 1 if constant).
  BinaryForm normalized() const;
  Fe leading_scalar() const { return affine.lead(); }
  std::string to_string() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    return {a.affine * b.affine, a.degree + b.degree};
  }
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree == b.degree && a.affine == b.affine;
  }
};

bool canonical_less(const BinaryForm& a, const BinaryForm& b);

struct FormFactorization {
  Fe unit;
  std::vector<std::pair<BinaryForm, int>> factors;  // normalized; v last if present
  std::vector<int> degree_pattern() const;
};

FormFactorization factorize_form(const BinaryForm& f);

/// Polynomial in x with coefficients in K[t], ascending in x.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> coeffs);
  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Poly>& coeffs() const { return c_; }
  /// Specialize t = t0.
  Poly at_t(const Fe& t0) const;
  std::string to_string() const;

 private:
  std::vector<Poly> c_;
};

/// F(x) = f0(t) + f1(t) x + f2(t) x^2 mod G(t, x).
std::vector<Poly> reduce_mod_cubic(const Poly& f, const BiPoly& g);

}  // namespace trigonal

#endif  // TRIGONAL_POLY_HPP_

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

// Prime fields F_p (p > 3) and their extensions F_{p^k}, each represented in
// a single polynomial basis over F_p modulo a deterministic irreducible.

#ifndef TRIGONAL_FIELD_HPP_
#define TRIGONAL_FIELD_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace trigonal {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Independent of the standard library's
/// distribution implementation so seeded runs agree across toolchains.
mpz_class random_below(Rng& rng, const mpz_class& bound);

bool is_probable_prime(const mpz_class& n);

class Field;
class Fe;
std::optional<Fe> sqrt(const Fe& a);

/// An element of a finite field. Elements compare equal only when they live
/// in the same field and have the same coordinates.
class Fe {
 public:
  Fe() = default;
  Fe(const Field& field, std::vector<mpz_class> coeffs);

  bool valid() const { return field_ != nullptr; }
  const Field& field() const { return *field_; }

  std::span<const mpz_class> coeffs() const { return c_; }
  const mpz_class& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const;

  Fe& operator+=(const Fe& rhs);
  Fe& operator-=(const Fe& rhs);
  Fe& operator*=(const Fe& rhs);
  Fe& operator/=(const Fe& rhs) { return *this *= rhs.inverse(); }
  Fe operator-() const;

  friend Fe operator+(Fe a, const Fe& b) { return a += b; }
  friend Fe operator-(Fe a, const Fe& b) { return a -= b; }
  friend Fe operator*(Fe a, const Fe& b) { return a *= b; }
  friend Fe operator/(Fe a, const Fe& b) { return a /= b; }

  Fe inverse() const;
  Fe pow(const mpz_class& e) const;
  Fe square() const { return *this * *this; }
  /// a^p.
  Fe frobenius() const;
  /// a^(p^times).
  Fe frobenius(int times) const;
  /// Product of all Galois conjugates over F_p.
  mpz_class norm() const;

  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  /// Decimal for prime-field elements, "[c0,c1,...]" otherwise.
  std::string to_string() const;

 private:
  friend class Field;
  void check_same(const Fe& other) const;

  const Field* field_ = nullptr;
  std::vector<mpz_class> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Fe& a) { return os << a.to_string(); }

/// Order on encodings: highest coordinate compared first, i.e. the order of
/// the integers sum c_i p^i.
bool canonical_less(const Fe& a, const Fe& b);

/// F_{p^k}. Instances are interned per (p, k), immutable, and live for the
/// whole process; refer to them by reference or pointer.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  static const Field& prime(const mpz_class& p);
  static const Field& extension(const mpz_class& p, int k);

  const mpz_class& characteristic() const { return p_; }
  int degree() const { return k_; }
  const mpz_class& order() const { return q_; }
  bool is_prime() const { return k_ == 1; }
  /// Ascending coefficients of the monic defining polynomial (k + 1 entries).
  const std::vector<mpz_class>& modulus() const { return modulus_; }
  const Field& prime_field() const;

  Fe zero() const;
  Fe one() const;
  Fe element(long value) const;
  Fe element(const mpz_class& value) const;
  Fe from_coeffs(std::vector<mpz_class> coeffs) const;
  /// The class of x in F_p[x]/(modulus).
  Fe generator() const;
  Fe random(Rng& rng) const;
  /// A fixed quadratic non-residue (smallest in canonical order).
  const Fe& nonresidue() const { return nonresidue_; }

  std::string label() const;

 private:
  friend class Fe;
  friend std::optional<Fe> sqrt(const Fe& a);
  Field(mpz_class p, int k, std::vector<mpz_class> modulus);
  void init_tables();

  void reduce(mpz_class& x) const;
  void mul_into(std::vector<mpz_class>& out, const std::vector<mpz_class>& a,
                const std::vector<mpz_class>& b) const;

  mpz_class p_;
  int k_;
  mpz_class q_;
  std::vector<mpz_class> modulus_;
  std::vector<std::pair<int, mpz_class>> modulus_terms_;  // nonzero, below x^k
  std::vector<Fe> frobenius_images_;  // (x^i)^p for i < k
  Fe nonresidue_;
  // q - 1 = 2^two_adicity_ * odd_part_
  int two_adicity_ = 0;
  mpz_class odd_part_;
};

/// Context for F_{p^k}; modulus is the least monic irreducible of degree k
/// in lexicographic order of its ascending coefficient sequence.
const Field& make_extension(const mpz_class& p, int k);

/// a^q where q is the order of a subfield of a's field.
Fe frobenius(const Fe& a, const mpz_class& base_order);

/// Square root with the smaller canonical encoding, or nullopt for
/// non-residues.
std::optional<Fe> sqrt(const Fe& a);

/// Euler criterion; zero counts as a square.
bool is_square(const Fe& a);

}  // namespace trigonal

#endif  // TRIGONAL_FIELD_HPP_

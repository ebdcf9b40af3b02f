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

#include "trigonal/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {

Poly::Poly(const Field& field, std::vector<Fe> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!c.valid()) c = field.zero();
    else if (&c.field() != &field)
      throw Error(ErrorCode::kContextMismatch, "coefficient outside " + field.label());
  }
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::x(const Field& field) { return Poly(field, {field.zero(), field.one()}); }

Poly Poly::monomial(const Fe& c, int n) {
  std::vector<Fe> v(static_cast<size_t>(n) + 1, c.field().zero());
  v[static_cast<size_t>(n)] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(const Field& field, const std::vector<long>& coeffs) {
  std::vector<Fe> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.push_back(field.element(c));
  return Poly(field, std::move(v));
}

Fe Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return c_[static_cast<size_t>(i)];
}

void Poly::set_coeff(int i, const Fe& value) {
  if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, field_->zero());
  c_[static_cast<size_t>(i)] = value;
  normalize();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  std::vector<Fe> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(*a.field_, std::move(r));
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Fe& rhs) {
  for (auto& c : c_) c *= rhs;
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

Fe Poly::eval(const Fe& x) const {
  if (&x.field() != field_) {
    Fe r = x.field().zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + embed(c_[i], x.field());
    return r;
  }
  Fe r = field_->zero();
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::derivative() const {
  std::vector<Fe> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_->element(static_cast<long>(i)));
  return Poly(*field_, std::move(r));
}

Poly Poly::shifted(int n) const {
  if (is_zero()) return *this;
  std::vector<Fe> r(static_cast<size_t>(n), field_->zero());
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(*field_, std::move(r));
}

Poly Poly::frobenius(int times) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.frobenius(times);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  if (a.c_.empty()) return true;
  return a.field_ == b.field_ && a.c_ == b.c_;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (!unit || i == 0) os << c_[i].to_string();
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Fe ca = a.coeff(i), cb = b.coeff(i);
    if (ca != cb) return canonical_less(ca, cb);
  }
  return false;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Fe> r(a.coeffs().begin(), a.coeffs().end());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Fe> q(static_cast<size_t>(dq) + 1, f.zero());
  const Fe inv = b.lead().inverse();
  const bool monic = b.lead().is_one();
  for (int i = dq; i >= 0; --i) {
    Fe c = r[static_cast<size_t>(i + db)];
    if (c.is_zero()) continue;
    if (!monic) c *= inv;
    q[static_cast<size_t>(i)] = c;
    for (int j = 0; j < db; ++j) r[static_cast<size_t>(i + j)] -= c * bc[static_cast<size_t>(j)];
    r[static_cast<size_t>(i + db)] = f.zero();
  }
  r.resize(static_cast<size_t>(db));
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fe inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly invmod(const Poly& a, const Poly& m) {
  Xgcd e = xgcd(a % m, m);
  if (!e.g.is_one()) throw Error(ErrorCode::kInternal, "polynomial not invertible modulo m");
  return e.s % m;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  const Field& f = base.field();
  Poly result = Poly::constant(f.one()) % mod;
  Poly b = base % mod;
  for (size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = (result * b) % mod;
  }
  return result;
}

Poly compose_mod(const Poly& f, const Poly& g, const Poly& m) {
  Poly r(f.field());
  for (int i = f.degree(); i >= 0; --i) {
    r = (r * g) % m;
    r += Poly::constant(f.coeff(i));
  }
  return r % m;
}

Poly pow(const Poly& base, unsigned e) {
  Poly r = Poly::constant(base.field().one());
  Poly b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "is_squarefree of zero");
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

// Inverse of the p-th power map on a polynomial in x^p.
Poly pth_root(const Poly& f) {
  const Field& field = f.field();
  const long p = f.field().characteristic().get_si();
  std::vector<Fe> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    r.push_back(f.coeff(i).frobenius(field.degree() - 1));
  return Poly(field, std::move(r));
}

std::vector<std::pair<Poly, int>> squarefree_parts(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() <= 0) return out;
  const int p = static_cast<int>(f.field().characteristic().get_si());
  const bool small_p = f.field().characteristic().fits_sint_p();
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_parts(pth_root(f))) out.emplace_back(g, m * p);
    return out;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0 && small_p) {
    for (auto& [g, m] : squarefree_parts(pth_root(c.monic()))) out.emplace_back(g, m * p);
  }
  return out;
}

std::uint64_t poly_hash(const Poly& f) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  mix(f.field().label());
  for (const auto& c : f.coeffs()) {
    mix(c.to_string());
    mix(";");
  }
  return h;
}

Poly random_poly(const Field& field, int degree_below, Rng& rng) {
  std::vector<Fe> c;
  for (int i = 0; i < degree_below; ++i) c.push_back(field.random(rng));
  return Poly(field, std::move(c));
}

void edf_rec(const Poly& f, int d, const mpz_class& exponent, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  while (true) {
    Poly h = random_poly(f.field(), f.degree(), rng);
    if (h.degree() <= 0) continue;
    Poly g = gcd(h, f);
    if (g.degree() <= 0) {
      Poly w = powmod(h, exponent, f);
      w -= Poly::constant(f.field().one());
      g = gcd(w, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf_rec(g, d, exponent, rng, out);
      edf_rec(f / g, d, exponent, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<int, Poly>> distinct_degree(const Poly& f_in) {
  std::vector<std::pair<int, Poly>> out;
  Poly f = f_in.monic();
  const Field& field = f.field();
  if (f.degree() <= 0) return out;
  const Poly x = Poly::x(field);
  const Poly xq = powmod(x, field.order(), f);
  Poly h = xq;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      f = f / g;
      h = h % f;
    }
    if (2 * (d + 1) > f.degree()) break;
    h = compose_mod(h, xq % f, f);
  }
  if (f.degree() > 0) out.emplace_back(f.degree(), f);
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, int d) {
  std::vector<Poly> out;
  Poly g = f.monic();
  if (g.degree() <= 0) return out;
  if (g.degree() % d != 0) throw Error(ErrorCode::kInternal, "equal_degree: degree mismatch");
  Rng rng(poly_hash(g) ^ static_cast<std::uint64_t>(d));
  mpz_class exponent;
  mpz_pow_ui(exponent.get_mpz_t(), g.field().order().get_mpz_t(), static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  edf_rec(g, d, exponent, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return canonical_less(a, b); });
  return out;
}

Factorization factorize(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "factorize of zero");
  Factorization out{f.lead(), {}};
  for (const auto& [part, mult] : squarefree_parts(f.monic())) {
    for (const auto& [d, block] : distinct_degree(part)) {
      for (auto& g : equal_degree(block, d)) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

Poly Factorization::product() const {
  Poly r = Poly::constant(unit);
  for (const auto& [g, m] : factors) r *= pow(g, static_cast<unsigned>(m));
  return r;
}

std::vector<int> Factorization::degree_pattern() const {
  std::vector<int> d;
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) d.push_back(g.degree());
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::vector<Fe> roots(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "roots of zero");
  std::vector<Fe> out;
  Poly g = f.monic();
  if (g.degree() <= 0) return out;
  const Poly x = Poly::x(g.field());
  Poly lin = gcd(powmod(x, g.field().order(), g) - x, g);
  for (const auto& h : equal_degree(lin, 1)) out.push_back(-h.coeff(0));
  std::sort(out.begin(), out.end(), [](const Fe& a, const Fe& b) { return canonical_less(a, b); });
  return out;
}

std::optional<std::pair<Fe, Poly>> exact_square_root(const Poly& s) {
  if (s.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "square root of zero");
  if (s.degree() % 2 != 0) return std::nullopt;
  const Field& field = s.field();
  const Fe alpha = s.lead();
  const Poly m = s.monic();
  const int n = m.degree() / 2;
  std::vector<Fe> r(static_cast<size_t>(n) + 1, field.zero());
  r[static_cast<size_t>(n)] = field.one();
  const Fe half = field.element(2).inverse();
  for (int i = n - 1; i >= 0; --i) {
    Fe acc = m.coeff(n + i);
    for (int j = i + 1; j < n; ++j) {
      const int k = n + i - j;
      if (k > i && k < n) acc -= r[static_cast<size_t>(j)] * r[static_cast<size_t>(k)];
    }
    r[static_cast<size_t>(i)] = acc * half;
  }
  Poly root(field, std::move(r));
  if (root * root != m) return std::nullopt;
  return std::make_pair(alpha, root);
}

Poly embed(const Poly& f, const Field& target) {
  if (&f.field() == &target) return f;
  std::vector<Fe> c;
  for (const auto& a : f.coeffs()) c.push_back(trigonal::embed(a, target));
  return Poly(target, std::move(c));
}

Poly restrict_to(const Poly& f, const Field& target) {
  if (&f.field() == &target) return f;
  std::vector<Fe> c;
  for (const auto& a : f.coeffs()) c.push_back(trigonal::restrict_to(a, target));
  return Poly(target, std::move(c));
}

// ---------------------------------------------------------------------------
// Binary forms

BinaryForm BinaryForm::v_power(const Field& field, int n) {
  return {Poly::constant(field.one()), n};
}

BinaryForm BinaryForm::normalized() const {
  if (affine.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "zero binary form");
  return {affine.monic(), degree};
}

std::string BinaryForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree; i >= 0; --i) {
    const Fe c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.to_string() << '*';
    os << "u^" << i << "*v^" << (degree - i);
  }
  return first ? "0" : os.str();
}

bool canonical_less(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  return canonical_less(a.affine, b.affine);
}

FormFactorization factorize_form(const BinaryForm& f) {
  Factorization fa = factorize(f.affine);
  FormFactorization out{fa.unit, {}};
  for (auto& [g, m] : fa.factors) {
    const int d = g.degree();
    out.factors.push_back({BinaryForm{std::move(g), d}, m});
  }
  const int vm = f.v_multiplicity();
  if (vm > 0) out.factors.push_back({BinaryForm::v_power(f.field(), 1), vm});
  return out;
}

std::vector<int> FormFactorization::degree_pattern() const {
  std::vector<int> d;
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) d.push_back(g.degree);
  std::sort(d.rbegin(), d.rend());
  return d;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly BiPoly::at_t(const Fe& t0) const {
  std::vector<Fe> r;
  for (const auto& c : c_) r.push_back(c.eval(t0));
  return Poly(t0.field(), std::move(r));
}

std::string BiPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[i].to_string("t") << ")";
    if (i > 0) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

std::vector<Poly> reduce_mod_cubic(const Poly& f, const BiPoly& g) {
  if (g.degree_x() != 3 || !g.coeff(3).is_one())
    throw Error(ErrorCode::kNotMonicCubic, "G must be monic of degree 3 in x");
  const Field& field = f.field();
  std::vector<Poly> c;
  for (int i = 0; i <= std::max(f.degree(), 2); ++i) c.push_back(Poly::constant(f.coeff(i)));
  for (int i = static_cast<int>(c.size()) - 1; i >= 3; --i) {
    const Poly top = c[static_cast<size_t>(i)];
    if (top.is_zero()) continue;
    for (int j = 0; j < 3; ++j) c[static_cast<size_t>(i - 3 + j)] -= top * g.coeff(j);
    c[static_cast<size_t>(i)] = Poly(field);
  }
  c.resize(3);
  for (auto& x : c)
    if (!x.valid()) x = Poly(field);
  return c;
}

}  // namespace trigonal

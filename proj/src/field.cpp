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

#include "trigonal/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "trigonal/error.hpp"

namespace trigonal {

namespace {

// Dense polynomials over F_p as ascending mpz vectors; used only to select
// the defining polynomial of an extension before any Field exists.
using RawPoly = std::vector<mpz_class>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void raw_mod(RawPoly& a, const RawPoly& f, const mpz_class& p) {
  // f monic.
  const size_t n = f.size() - 1;
  for (size_t i = a.size(); i-- > n;) {
    mpz_class c = a[i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    if (c != 0) {
      for (size_t j = 0; j < n; ++j) a[i - n + j] -= c * f[j];
    }
    a[i] = 0;
  }
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  trim(a);
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f,
                   const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  raw_mod(r, f, p);
  return r;
}

RawPoly raw_pow_mod(RawPoly base, const mpz_class& e, const RawPoly& f,
                    const mpz_class& p) {
  RawPoly result{1};
  raw_mod(result, f, p);
  raw_mod(base, f, p);
  for (size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    result = raw_mulmod(result, result, f, p);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = raw_mulmod(result, base, f, p);
  }
  return result;
}

// Generic remainder for non-monic divisors (used by gcd).
void raw_rem(RawPoly& a, const RawPoly& b, const mpz_class& p) {
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  const size_t n = b.size() - 1;
  while (a.size() >= b.size()) {
    mpz_class c = a.back() * inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    const size_t shift = a.size() - 1 - n;
    for (size_t j = 0; j <= n; ++j) {
      a[shift + j] -= c * b[j];
      mpz_fdiv_r(a[shift + j].get_mpz_t(), a[shift + j].get_mpz_t(),
                 p.get_mpz_t());
    }
    trim(a);
  }
}

size_t raw_gcd_degree(RawPoly a, RawPoly b, const mpz_class& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    raw_rem(a, b, p);
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test.
bool raw_is_irreducible(const RawPoly& f, const mpz_class& p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  if (f[0] == 0) return false;
  std::vector<RawPoly> xpow(static_cast<size_t>(k) + 1);
  xpow[0] = {0, 1};
  for (int i = 1; i <= k; ++i) xpow[i] = raw_pow_mod(xpow[i - 1], p, f, p);
  RawPoly x{0, 1};
  raw_mod(x, f, p);
  if (xpow[k] != x) return false;
  for (int r : prime_divisors(k)) {
    RawPoly h = xpow[k / r];
    h.resize(std::max<size_t>(h.size(), 2));
    h[1] -= 1;
    for (auto& c : h) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    trim(h);
    if (h.empty() || raw_gcd_degree(f, h, p) != 0) return false;
  }
  return true;
}

RawPoly least_irreducible(const mpz_class& p, int k) {
  if (k == 1) return {0, 1};
  // Lexicographic order on (c_0, ..., c_{k-1}); c_0 = 0 is never irreducible.
  RawPoly f(static_cast<size_t>(k) + 1, 0);
  f[k] = 1;
  f[0] = 1;
  while (true) {
    if (raw_is_irreducible(f, p)) return f;
    int i = k - 1;
    while (i >= 0) {
      f[i] += 1;
      if (f[i] < p) break;
      f[i] = 0;
      --i;
    }
    if (i < 0) throw Error(ErrorCode::kInternal, "no irreducible found");
  }
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<std::string, int>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

mpz_class random_below(Rng& rng, const mpz_class& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInternal, "random_below: empty range");
  const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const size_t words = (bits + 63) / 64;
  mpz_class r;
  while (true) {
    r = 0;
    for (size_t w = 0; w < words; ++w) {
      std::uint64_t v = rng();
      if (w == words - 1 && bits % 64 != 0) v &= (std::uint64_t{1} << (bits % 64)) - 1;
      mpz_class part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
      r += part << static_cast<mp_bitcnt_t>(64 * w);
    }
    if (r < bound) return r;
  }
}

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(mpz_class p, int k, std::vector<mpz_class> modulus)
    : p_(std::move(p)), k_(k), modulus_(std::move(modulus)) {
  mpz_pow_ui(q_.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(k_));
  for (int i = 0; i < k_; ++i)
    if (modulus_[i] != 0) modulus_terms_.emplace_back(i, p_ - modulus_[i]);
}

void Field::init_tables() {
  // x^p, then its powers.
  Fe xp = generator().pow(p_);
  frobenius_images_.reserve(static_cast<size_t>(k_));
  Fe acc = one();
  for (int i = 0; i < k_; ++i) {
    frobenius_images_.push_back(acc);
    acc *= xp;
  }
  mpz_class qm1 = q_ - 1;
  odd_part_ = qm1;
  two_adicity_ = 0;
  while (mpz_even_p(odd_part_.get_mpz_t())) {
    odd_part_ >>= 1;
    ++two_adicity_;
  }
  // Smallest non-residue in canonical order: walk the integers sum c_i p^i.
  // For even k all of F_p is square, so start past it.
  for (mpz_class n = k_ % 2 == 0 ? p_ : mpz_class(1);; ++n) {
    std::vector<mpz_class> c(static_cast<size_t>(k_));
    mpz_class t = n;
    for (int i = 0; i < k_ && t != 0; ++i) {
      mpz_fdiv_qr(t.get_mpz_t(), c[i].get_mpz_t(), t.get_mpz_t(), p_.get_mpz_t());
    }
    Fe cand(*this, std::move(c));
    if (!is_square(cand)) {
      nonresidue_ = cand;
      break;
    }
  }
}

const Field& Field::extension(const mpz_class& p, int k) {
  if (k < 1 || k > 24) throw Error(ErrorCode::kBadDegree, "extension degree must lie in 1..24");
  auto& reg = registry();
  const auto key = std::make_pair(p.get_str(), k);
  {
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return *it->second;
  }
  if (p <= 3) throw Error(ErrorCode::kPrimeTooSmall, "characteristic must exceed 3");
  if (!is_probable_prime(p)) throw Error(ErrorCode::kNonPrime, p.get_str() + " is not prime");
  // Build outside the lock: the prime subfield may be requested recursively.
  if (k > 1) Field::extension(p, 1);
  std::unique_ptr<Field> field(new Field(p, k, least_irreducible(p, k)));
  field->init_tables();
  std::lock_guard<std::mutex> lock(reg.mutex);
  auto [it, inserted] = reg.fields.emplace(key, std::move(field));
  return *it->second;
}

const Field& Field::prime(const mpz_class& p) { return extension(p, 1); }

const Field& Field::prime_field() const {
  return k_ == 1 ? *this : Field::prime(p_);
}

const Field& make_extension(const mpz_class& p, int k) {
  return Field::extension(p, k);
}

void Field::reduce(mpz_class& x) const {
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
}

void Field::mul_into(std::vector<mpz_class>& out, const std::vector<mpz_class>& a,
                     const std::vector<mpz_class>& b) const {
  if (k_ == 1) {
    out[0] = a[0] * b[0];
    reduce(out[0]);
    return;
  }
  const size_t k = static_cast<size_t>(k_);
  thread_local std::vector<mpz_class> prod;
  if (prod.size() < 2 * k - 1) prod.resize(2 * k - 1);
  for (size_t i = 0; i < 2 * k - 1; ++i) prod[i] = 0;
  for (size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < k; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  // x^k = sum (p - m_j) x^j
  for (size_t i = 2 * k - 1; i-- > k;) {
    reduce(prod[i]);
    if (prod[i] == 0) continue;
    for (const auto& [j, m] : modulus_terms_) {
      mpz_addmul(prod[i - k + static_cast<size_t>(j)].get_mpz_t(), prod[i].get_mpz_t(),
                 m.get_mpz_t());
    }
  }
  for (size_t i = 0; i < k; ++i) {
    reduce(prod[i]);
    mpz_swap(out[i].get_mpz_t(), prod[i].get_mpz_t());
  }
}

Fe Field::zero() const { return Fe(*this, std::vector<mpz_class>(static_cast<size_t>(k_))); }

Fe Field::one() const { return element(1); }

Fe Field::element(long value) const { return element(mpz_class(value)); }

Fe Field::element(const mpz_class& value) const {
  std::vector<mpz_class> c(static_cast<size_t>(k_));
  c[0] = value;
  return Fe(*this, std::move(c));
}

Fe Field::from_coeffs(std::vector<mpz_class> coeffs) const {
  return Fe(*this, std::move(coeffs));
}

Fe Field::generator() const {
  if (k_ == 1) return element(p_ - modulus_[0]);
  std::vector<mpz_class> c(static_cast<size_t>(k_));
  c[1] = 1;
  return Fe(*this, std::move(c));
}

Fe Field::random(Rng& rng) const {
  std::vector<mpz_class> c(static_cast<size_t>(k_));
  for (auto& x : c) x = random_below(rng, p_);
  return Fe(*this, std::move(c));
}

std::string Field::label() const {
  std::string s = "F_" + p_.get_str();
  if (k_ > 1) s += "^" + std::to_string(k_);
  return s;
}

// ---------------------------------------------------------------------------
// Fe

Fe::Fe(const Field& field, std::vector<mpz_class> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  if (c_.size() > static_cast<size_t>(field.k_)) {
    // Reduce a longer representative modulo the defining polynomial.
    RawPoly r = std::move(c_);
    raw_mod(r, field.modulus_, field.p_);
    c_ = std::move(r);
  }
  c_.resize(static_cast<size_t>(field.k_));
  for (auto& x : c_) field.reduce(x);
}

void Fe::check_same(const Fe& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::kContextMismatch,
                "operands live in " + (field_ ? field_->label() : std::string("<none>")) +
                    " and " + (other.field_ ? other.field_->label() : std::string("<none>")));
  }
}

bool Fe::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Fe::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Fe::in_prime_field() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Fe& Fe::operator+=(const Fe& rhs) {
  check_same(rhs);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += rhs.c_[i];
    if (c_[i] >= field_->p_) c_[i] -= field_->p_;
  }
  return *this;
}

Fe& Fe::operator-=(const Fe& rhs) {
  check_same(rhs);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= rhs.c_[i];
    if (c_[i] < 0) c_[i] += field_->p_;
  }
  return *this;
}

Fe& Fe::operator*=(const Fe& rhs) {
  check_same(rhs);
  field_->mul_into(c_, c_, rhs.c_);
  return *this;
}

Fe Fe::operator-() const {
  Fe r = *this;
  for (auto& x : r.c_)
    if (x != 0) x = field_->p_ - x;
  return r;
}

Fe Fe::frobenius() const {
  const Field& f = *field_;
  if (f.k_ == 1) return *this;
  Fe r = f.zero();
  for (int i = 0; i < f.k_; ++i) {
    if (c_[i] == 0) continue;
    const Fe& img = f.frobenius_images_[i];
    for (int j = 0; j < f.k_; ++j)
      mpz_addmul(r.c_[j].get_mpz_t(), c_[i].get_mpz_t(), img.c_[j].get_mpz_t());
  }
  for (auto& x : r.c_) f.reduce(x);
  return r;
}

Fe Fe::frobenius(int times) const {
  const int k = field_->k_;
  times %= k;
  if (times < 0) times += k;
  Fe r = *this;
  for (int i = 0; i < times; ++i) r = r.frobenius();
  return r;
}

mpz_class Fe::norm() const {
  const Field& f = *field_;
  if (f.k_ == 1) return c_[0];
  Fe acc = *this;
  Fe conj = *this;
  for (int i = 1; i < f.k_; ++i) {
    conj = conj.frobenius();
    acc *= conj;
  }
  return acc.c_[0];
}

Fe Fe::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kInternal, "inverse of zero");
  const Field& f = *field_;
  if (f.k_ == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), c_[0].get_mpz_t(), f.p_.get_mpz_t());
    return f.element(inv);
  }
  // a^-1 = N(a)^-1 * prod_{i>=1} sigma^i(a)
  Fe others = f.one();
  Fe conj = *this;
  for (int i = 1; i < f.k_; ++i) {
    conj = conj.frobenius();
    others *= conj;
  }
  Fe n = *this * others;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), n.c_[0].get_mpz_t(), f.p_.get_mpz_t());
  return others * f.element(inv);
}

Fe Fe::pow(const mpz_class& e) const {
  const Field& f = *field_;
  if (e < 0) return inverse().pow(-e);
  if (f.k_ == 1) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), c_[0].get_mpz_t(), e.get_mpz_t(), f.p_.get_mpz_t());
    return f.element(r);
  }
  Fe result = f.one();
  for (size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), bit)) result *= *this;
  }
  return result;
}

bool operator==(const Fe& a, const Fe& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

std::string Fe::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ']';
  return os.str();
}

bool canonical_less(const Fe& a, const Fe& b) {
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (size_t i = ca.size(); i-- > 0;) {
    const int cmp = mpz_cmp(ca[i].get_mpz_t(), cb[i].get_mpz_t());
    if (cmp != 0) return cmp < 0;
  }
  return false;
}

Fe frobenius(const Fe& a, const mpz_class& base_order) {
  const Field& f = a.field();
  mpz_class q = 1;
  int times = 0;
  while (q < base_order) {
    q *= f.characteristic();
    ++times;
  }
  if (q != base_order || f.degree() % times != 0) {
    throw Error(ErrorCode::kContextMismatch,
                base_order.get_str() + " is not the order of a subfield of " + f.label());
  }
  return a.frobenius(times);
}

bool is_square(const Fe& a) {
  if (a.is_zero()) return true;
  const Field& f = a.field();
  mpz_class n = a.norm();
  return mpz_legendre(n.get_mpz_t(), f.characteristic().get_mpz_t()) == 1;
}

std::optional<Fe> sqrt(const Fe& a) {
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  const Field& f = a.field();
  Fe root;
  if (f.degree() == 1 && mpz_tstbit(f.characteristic().get_mpz_t(), 1)) {
    // p = 3 mod 4
    root = a.pow((f.characteristic() + 1) / 4);
  } else {
    // Tonelli-Shanks in F_q.
    const Fe& z = f.nonresidue();
    int m = f.two_adicity_;
    Fe c = z.pow(f.odd_part_);
    Fe t = a.pow(f.odd_part_);
    root = a.pow((f.odd_part_ + 1) / 2);
    while (!t.is_one()) {
      int i = 0;
      Fe t2 = t;
      while (!t2.is_one()) {
        t2 = t2.square();
        ++i;
      }
      Fe b = c;
      for (int j = 0; j < m - i - 1; ++j) b = b.square();
      m = i;
      c = b.square();
      t *= c;
      root *= b;
    }
  }
  Fe other = -root;
  return canonical_less(other, root) ? other : root;
}

}  // namespace trigonal

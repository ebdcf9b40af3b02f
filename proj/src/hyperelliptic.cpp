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

#include "trigonal/hyperelliptic.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {

// ---------------------------------------------------------------------------
// Mobius

Mobius Mobius::identity(const Field& field) {
  return {field.one(), field.zero(), field.zero(), field.one()};
}

bool Mobius::is_identity() const {
  return b.is_zero() && c.is_zero() && a == d;
}

Mobius Mobius::compose(const Mobius& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mobius Mobius::inverse() const {
  const Fe det_inv = det().inverse();
  return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

Mobius Mobius::embedded(const Field& target) const {
  return {embed(a, target), embed(b, target), embed(c, target), embed(d, target)};
}

std::optional<Fe> Mobius::apply(const Fe& x) const {
  const Fe den = c * x + d;
  if (den.is_zero()) return std::nullopt;
  return (a * x + b) / den;
}

// ---------------------------------------------------------------------------
// HCurve

HCurve::HCurve(Poly f) : f_(std::move(f)) {
  if (f_.degree() != 7 && f_.degree() != 8)
    throw Error(ErrorCode::kInvalidCurve, "degree must be 7 or 8, got " + std::to_string(f_.degree()));
  if (!is_squarefree(f_)) throw Error(ErrorCode::kInvalidCurve, "F is not squarefree");
}

HCurve HCurve::from_form(const BinaryForm& form) {
  if (form.degree != 8) throw Error(ErrorCode::kInvalidCurve, "form must have degree 8");
  return HCurve(form.affine);
}

bool HCurve::contains(const Point& pt) const {
  return pt.y.square() == f_.eval(pt.x);
}

HCurve HCurve::twist(const Fe& c) const { return HCurve(f_ * c); }

HCurve HCurve::embedded(const Field& target) const {
  if (&target == &field()) return *this;
  return HCurve(trigonal::embed(f_, target));
}

std::string HCurve::to_string() const { return "y^2 = " + f_.to_string(); }

BinaryForm pullback(const BinaryForm& form, const Mobius& m) {
  const Field& k = m.field();
  const Poly f = embed(form.affine, k);
  const Poly num = Poly(k, {m.b, m.a});
  const Poly den = Poly(k, {m.d, m.c});
  Poly out(k);
  for (int i = 0; i <= form.degree; ++i) {
    const Fe ci = f.coeff(i);
    if (ci.is_zero()) continue;
    out += pow(num, static_cast<unsigned>(i)) * pow(den, static_cast<unsigned>(form.degree - i)) * ci;
  }
  return {out, form.degree};
}

HCurve pullback(const HCurve& target, const Mobius& m) {
  return HCurve::from_form(pullback(target.form(), m));
}

std::optional<Point> pull_point(const Point& pt, const Mobius& m) {
  const Field& k = m.field();
  const Fe xt = embed(pt.x, k);
  auto xs = m.inverse().apply(xt);
  if (!xs) return std::nullopt;
  const Fe w = m.c * *xs + m.d;
  return Point{*xs, embed(pt.y, k) * w.square().square()};
}

std::optional<Point> push_point(const Point& pt, const Mobius& m) {
  const Field& k = m.field();
  const Fe xs = embed(pt.x, k);
  auto xt = m.apply(xs);
  if (!xt) return std::nullopt;
  const Fe w = m.c * xs + m.d;
  return Point{*xt, embed(pt.y, k) / w.square().square()};
}

// ---------------------------------------------------------------------------
// Mumford

std::string Mumford::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

Mumford pull_ideal(const Mumford& dv, const Mobius& m) {
  const Field& k = m.field();
  const Poly a_t = embed(dv.a, k);
  const Poly b_t = embed(dv.b, k);
  const int n = a_t.degree();
  if (n <= 0) return {Poly::constant(k.one()), Poly(k)};
  const Poly num = Poly(k, {m.b, m.a});
  const Poly den = Poly(k, {m.d, m.c});
  Poly a_s(k);
  for (int i = 0; i <= n; ++i)
    a_s += pow(num, static_cast<unsigned>(i)) * pow(den, static_cast<unsigned>(n - i)) * a_t.coeff(i);
  if (a_s.degree() != n) throw Error(ErrorCode::kBadSupport, "divisor meets the point at infinity of the chart");
  a_s = a_s.monic();
  Poly b_num(k);
  for (int i = 0; i < n; ++i)
    b_num += pow(num, static_cast<unsigned>(i)) * pow(den, static_cast<unsigned>(n - 1 - i)) * b_t.coeff(i);
  const Poly scale = pow(den, 4);
  Poly b_s = (scale * b_num % a_s) * invmod(pow(den, static_cast<unsigned>(n - 1)), a_s) % a_s;
  return {a_s, b_s};
}

OddModel to_odd_model(const HCurve& h, const Field* k) {
  const Field& field = k ? *k : h.field();
  HCurve hk = h.embedded(field);
  if (hk.degree() == 7) return {h, hk, Mobius::identity(field)};
  const auto rs = roots(hk.f());
  if (rs.empty())
    throw Error(ErrorCode::kNoRationalWeierstrassPoint, "no Weierstrass point over " + field.label());
  const Mobius chart{rs.front(), field.one(), field.one(), field.zero()};
  return {h, pullback(hk, chart), chart};
}

Mumford identity(const HCurve& odd) {
  return {Poly::constant(odd.field().one()), Poly(odd.field())};
}

bool is_valid(const HCurve& odd, const Mumford& d) {
  if (!d.a.is_monic() || d.b.degree() >= d.a.degree()) return false;
  if (&d.a.field() != &odd.field()) return false;
  return ((d.b * d.b - odd.f()) % d.a).is_zero();
}

Mumford negate(const Mumford& d) { return {d.a, -d.b}; }

namespace {

void check_model(const HCurve& odd, const Mumford& d) {
  if (odd.degree() != 7)
    throw Error(ErrorCode::kModelMismatch, "Cantor arithmetic needs a degree-7 model");
  if (&d.a.field() != &odd.field())
    throw Error(ErrorCode::kModelMismatch, "class lives over " + d.a.field().label() +
                                               ", model over " + odd.field().label());
}

}  // namespace

Mumford reduce(const HCurve& odd, Mumford d) {
  while (d.a.degree() > 3) {
    Poly a2 = ((odd.f() - d.b * d.b) / d.a).monic();
    Poly b2 = (-d.b) % a2;
    d = {std::move(a2), std::move(b2)};
  }
  d.b = d.b % d.a;
  return d;
}

Mumford cantor_add(const HCurve& odd, const Mumford& d1, const Mumford& d2) {
  check_model(odd, d1);
  check_model(odd, d2);
  if (d1.is_identity()) return d2;
  if (d2.is_identity()) return d1;
  Xgcd g1 = xgcd(d1.a, d2.a);
  Xgcd g2 = xgcd(g1.g, d1.b + d2.b);
  const Poly& d = g2.g;
  const Poly s1 = g2.s * g1.s;
  const Poly s2 = g2.s * g1.t;
  const Poly& s3 = g2.t;
  Poly a = (d1.a * d2.a) / (d * d);
  Poly b = (s1 * d1.a * d2.b + s2 * d2.a * d1.b + s3 * (d1.b * d2.b + odd.f())) / d;
  b = b % a;
  return reduce(odd, {std::move(a), std::move(b)});
}

Mumford cantor_mul(const HCurve& odd, const Mumford& d, const mpz_class& n) {
  if (n < 0) return cantor_mul(odd, negate(d), -n);
  Mumford r = identity(odd);
  for (size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    r = cantor_add(odd, r, r);
    if (mpz_tstbit(n.get_mpz_t(), bit)) r = cantor_add(odd, r, d);
  }
  return r;
}

Mumford frobenius(const Mumford& d, int times) {
  return {d.a.frobenius(times), d.b.frobenius(times)};
}

Mumford embed(const Mumford& d, const Field& target) {
  return {embed(d.a, target), embed(d.b, target)};
}

Mumford restrict_to(const Mumford& d, const Field& target) {
  return {restrict_to(d.a, target), restrict_to(d.b, target)};
}

Mumford point_class(const Point& pt) {
  const Field& k = pt.x.field();
  return {Poly(k, {-pt.x, k.one()}), Poly::constant(pt.y)};
}

Mumford class_from_points(const HCurve& odd, const std::vector<Point>& plus,
                          const std::vector<Point>& minus) {
  Mumford r = identity(odd);
  for (const auto& p : plus) {
    if (!odd.contains(p)) throw Error(ErrorCode::kInvalidCurve, "point not on curve");
    r = cantor_add(odd, r, point_class(p));
  }
  for (const auto& p : minus) {
    if (!odd.contains(p)) throw Error(ErrorCode::kInvalidCurve, "point not on curve");
    r = cantor_add(odd, r, negate(point_class(p)));
  }
  return r;
}

std::optional<Point> random_point(const HCurve& curve, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Fe x = curve.field().random(rng);
    auto y = sqrt(curve.f().eval(x));
    const bool flip = (rng() & 1u) != 0;
    if (y) return Point{x, flip ? -*y : *y};
  }
  return std::nullopt;
}

Mumford random_class(const HCurve& odd, Rng& rng) {
  if (odd.degree() != 7)
    throw Error(ErrorCode::kNoRationalWeierstrassPoint, "random_class needs an odd model");
  Mumford r = identity(odd);
  for (int i = 0; i < 3; ++i) {
    auto pt = random_point(odd, rng);
    if (!pt) throw Error(ErrorCode::kInternal, "no random point found");
    r = cantor_add(odd, r, point_class(*pt));
  }
  return r;
}

Mumford galois_trace(const HCurve& odd, const Mumford& d) {
  const int m = odd.field().degree();
  Mumford acc = d, conj = d;
  for (int i = 1; i < m; ++i) {
    conj = frobenius(conj);
    acc = cantor_add(odd, acc, conj);
  }
  return acc;
}

Mumford two_torsion_from_pair(const OddModel& model, const BinaryForm& q) {
  const Field& k = model.field();
  if (q.degree != 2 || q.affine.is_zero() || q.affine.degree() == 0)
    throw Error(ErrorCode::kNotAFactor, "expected a quadratic form with distinct roots");
  const Poly qa = embed(q.affine, k);
  if (qa.degree() == 2) {
    const Fe disc = qa.coeff(1).square() - k.element(4) * qa.coeff(2) * qa.coeff(0);
    if (disc.is_zero()) throw Error(ErrorCode::kNotAFactor, "quadratic form has a repeated root");
  }
  const BinaryForm fk{embed(model.original.f(), k), 8};
  if (!(fk.affine % qa).is_zero() || q.v_multiplicity() > fk.v_multiplicity())
    throw Error(ErrorCode::kNotAFactor, "form does not divide F");
  const BinaryForm qs = pullback(BinaryForm{qa, 2}, model.chart);
  if (qs.affine.degree() <= 0) throw Error(ErrorCode::kNotAFactor, "degenerate pair");
  return {qs.affine.monic(), Poly(k)};
}

// ---------------------------------------------------------------------------
// Counting

unsigned worker_count() {
  if (const char* env = std::getenv("TRIGONAL_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1u;
}

namespace {

// F_{p^k} with p^k <= 2^30 in machine words, same basis as Field.
class SmallField {
 public:
  explicit SmallField(const Field& f)
      : p_(f.characteristic().get_ui()), k_(static_cast<size_t>(f.degree())), red_(k_), frob_(k_ * k_) {
    for (size_t j = 0; j < k_; ++j) red_[j] = (p_ - f.modulus()[j].get_ui() % p_) % p_;
    const Fe xp = f.generator().frobenius();
    Fe acc = f.one();
    for (size_t i = 0; i < k_; ++i) {
      for (size_t j = 0; j < k_; ++j) frob_[j * k_ + i] = acc.coeff(static_cast<int>(j)).get_ui();
      acc *= xp;
    }
    if (p_ <= (1ul << 24)) {
      squares_.assign(p_, 0);
      for (std::uint64_t x = 1; x < p_; ++x) squares_[x * x % p_] = 1;
    }
  }

  size_t k() const { return k_; }
  std::uint64_t p() const { return p_; }

  void mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out) const {
    std::uint64_t prod[64] = {};
    for (size_t i = 0; i < k_; ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    for (size_t i = 2 * k_ - 1; i-- > k_;) {
      if (!prod[i]) continue;
      for (size_t j = 0; j < k_; ++j) prod[i - k_ + j] = (prod[i - k_ + j] + prod[i] * red_[j]) % p_;
    }
    for (size_t i = 0; i < k_; ++i) out[i] = prod[i];
  }

  void frobenius(const std::uint64_t* a, std::uint64_t* out) const {
    for (size_t j = 0; j < k_; ++j) {
      std::uint64_t acc = 0;
      for (size_t i = 0; i < k_; ++i) acc = (acc + frob_[j * k_ + i] * a[i]) % p_;
      out[j] = acc;
    }
  }

  // 0, 1 or -1
  int character(const std::uint64_t* a) const {
    bool zero = true;
    for (size_t i = 0; i < k_; ++i) zero = zero && a[i] == 0;
    if (zero) return 0;
    std::uint64_t acc[32], conj[32], tmp[32];
    std::copy(a, a + k_, acc);
    std::copy(a, a + k_, conj);
    for (size_t i = 1; i < k_; ++i) {
      frobenius(conj, tmp);
      std::copy(tmp, tmp + k_, conj);
      mul(acc, conj, tmp);
      std::copy(tmp, tmp + k_, acc);
    }
    const std::uint64_t n = acc[0];
    if (!squares_.empty()) return squares_[n] ? 1 : -1;
    std::uint64_t r = 1, b = n, e = (p_ - 1) / 2;
    for (; e; e >>= 1, b = b * b % p_)
      if (e & 1) r = r * b % p_;
    return r == 1 ? 1 : -1;
  }

 private:
  std::uint64_t p_;
  size_t k_;
  std::vector<std::uint64_t> red_;   // x^k = sum red_j x^j
  std::vector<std::uint64_t> frob_;  // column i: (x^i)^p
  std::vector<char> squares_;
};

}  // namespace

mpz_class count_points(const HCurve& h, int k) {
  const Field& field = make_extension(h.field().characteristic(), k);
  if (field.order() > (mpz_class(1) << 30))
    throw Error(ErrorCode::kTooLarge, "field of order " + field.order().get_str() + " too large to enumerate");
  const SmallField sf(field);
  std::vector<std::uint64_t> fc;
  for (const auto& c : h.f().coeffs()) fc.push_back(c.coeff(0).get_ui());
  const unsigned long q = field.order().get_ui();
  const unsigned long p = sf.p();
  const unsigned threads = std::max(1u, std::min<unsigned>(worker_count(), 64));
  std::vector<unsigned long> partial(threads, 0);
  auto work = [&](unsigned id) {
    unsigned long count = 0;
    std::uint64_t x[32], v[32], tmp[32];
    for (unsigned long n = id; n < q; n += threads) {
      unsigned long t = n;
      for (size_t i = 0; i < sf.k(); ++i) {
        x[i] = t % p;
        t /= p;
      }
      // Horner with F_p coefficients
      std::fill(v, v + sf.k(), 0);
      for (size_t d = fc.size(); d-- > 0;) {
        sf.mul(v, x, tmp);
        std::copy(tmp, tmp + sf.k(), v);
        v[0] = (v[0] + fc[d]) % p;
      }
      count += static_cast<unsigned long>(1 + sf.character(v));
    }
    partial[id] = count;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }
  mpz_class total = 0;
  for (auto c : partial) total += c;
  if (h.f().degree() == 7) total += 1;
  else if (is_square(h.f().lead())) total += 2;
  return total;
}

std::vector<mpz_class> l_polynomial_from_counts(const mpz_class& q, const mpz_class& n1,
                                                const mpz_class& n2, const mpz_class& n3) {
  const mpz_class s1 = q + 1 - n1;
  const mpz_class s2 = q * q + 1 - n2;
  const mpz_class s3 = q * q * q + 1 - n3;
  const mpz_class e1 = s1;
  const mpz_class e2 = (e1 * s1 - s2) / 2;
  const mpz_class e3 = (e2 * s1 - e1 * s2 + s3) / 3;
  return {1, -e1, e2, -e3, q * e2, -q * q * e1, q * q * q};
}

std::vector<mpz_class> l_polynomial(const HCurve& h) {
  if (!h.field().is_prime()) throw Error(ErrorCode::kInternal, "l_polynomial expects a curve over F_p");
  return l_polynomial_from_counts(h.field().order(), count_points(h, 1), count_points(h, 2),
                                  count_points(h, 3));
}

}  // namespace trigonal

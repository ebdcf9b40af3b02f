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

#include "trigonal/isogeny.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {

namespace {

XCoords coords_from_b(const Fe& b0, const Fe& b1, const Fe& b2) {
  return {b0 * b0, b0 * b1, b0 * b2, b1 * b1, b1 * b2, b2 * b2};
}

// b0 + b1 x + b2 x^2 through three points with distinct x.
std::array<Fe, 3> interpolate(const std::array<Fe, 3>& xs, const std::array<Fe, 3>& ys) {
  const Field& k = xs[0].field();
  Fe b0 = k.zero(), b1 = k.zero(), b2 = k.zero();
  for (size_t i = 0; i < 3; ++i) {
    const Fe& xj = xs[(i + 1) % 3];
    const Fe& xk = xs[(i + 2) % 3];
    const Fe w = ys[i] / ((xs[i] - xj) * (xs[i] - xk));
    b2 += w;
    b1 -= w * (xj + xk);
    b0 += w * xj * xk;
  }
  return {b0, b1, b2};
}

bool lex_less(const XPoint& a, const XPoint& b) {
  if (a.t != b.t) return canonical_less(a.t, b.t);
  for (size_t i = 0; i < 6; ++i)
    if (a.b[i] != b.b[i]) return canonical_less(a.b[i], b.b[i]);
  return false;
}

bool term_less(const XPoint& a, const XPoint& b) {
  if (a.field().degree() != b.field().degree()) return a.field().degree() < b.field().degree();
  return lex_less(a, b);
}

XPoint map_coords(const XPoint& q, auto&& fn) {
  XPoint r{fn(q.t), {}};
  for (size_t i = 0; i < 6; ++i) r.b[i] = fn(q.b[i]);
  return r;
}

int lcm_degree(const XPoint& q) {
  int d = minimal_degree(q.t);
  for (const auto& c : q.b) d = std::lcm(d, minimal_degree(c));
  return d;
}

// Roots of G(t0, x) and square roots of F at them, in a field L holding all.
struct FiberData {
  const Field* L;
  Fe t;
  std::array<Fe, 3> xs, ys;
};

FiberData fiber_data(const Fibration& fib, const Fe& t0, const Field& K) {
  const Fe tk = &t0.field() == &K ? t0 : embed(t0, K);
  if (!fib.unramified(tk)) throw Error(ErrorCode::kRamifiedFiber, "t0 = " + tk.to_string() + " is ramified");
  const Poly gk = fib.G.at_t(tk);
  int e = 1;
  for (const auto& [deg, part] : distinct_degree(gk)) e = std::lcm(e, deg);
  const Field& L = make_extension(K.characteristic(), 2 * e * K.degree());
  FiberData fd{&L, embed(tk, L), {}, {}};
  const auto rs = roots(embed(gk, L));
  if (rs.size() != 3) throw Error(ErrorCode::kInternal, "G(t0, x) does not split");
  const Poly fl = embed(fib.curve.f(), L);
  for (size_t i = 0; i < 3; ++i) {
    fd.xs[i] = rs[i];
    auto y = sqrt(fl.eval(rs[i]));
    if (!y) throw Error(ErrorCode::kInternal, "no square root in the fiber field");
    fd.ys[i] = *y;
  }
  return fd;
}

}  // namespace

bool operator==(const XPoint& x, const XPoint& y) {
  if (&x.field() != &y.field() || x.t != y.t) return false;
  for (size_t i = 0; i < 6; ++i)
    if (x.b[i] != y.b[i]) return false;
  return true;
}

int orbit_size(const XPoint& q) { return lcm_degree(q); }

XPoint canonical_orbit_rep(const XPoint& q) {
  const int d = lcm_degree(q);
  const Field& fd = make_extension(q.field().characteristic(), d);
  XPoint best = map_coords(q, [&](const Fe& a) { return restrict_to(a, fd); });
  XPoint cur = best;
  for (int i = 1; i < d; ++i) {
    cur = map_coords(cur, [](const Fe& a) { return a.frobenius(); });
    if (lex_less(cur, best)) best = cur;
  }
  return best;
}

long XDivisor::degree() const {
  long n = 0;
  for (const auto& [q, w] : terms) n += w * q.field().degree();
  return n;
}

void XDivisor::add(const XPoint& rep, long weight) {
  if (weight == 0) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), rep,
                             [](const auto& term, const XPoint& q) { return term_less(term.first, q); });
  if (it != terms.end() && it->first == rep) {
    it->second += weight;
    if (it->second == 0) terms.erase(it);
  } else {
    terms.insert(it, {rep, weight});
  }
}

XDivisor XDivisor::operator-() const {
  XDivisor r = *this;
  for (auto& term : r.terms) term.second = -term.second;
  return r;
}

XDivisor operator+(const XDivisor& a, const XDivisor& b) {
  XDivisor r = a;
  for (const auto& [q, w] : b.terms) r.add(q, w);
  return r;
}

bool operator==(const XDivisor& a, const XDivisor& b) { return a.terms == b.terms; }

Isogeny make_isogeny(const HCurve& h, const TrigonalResult& tr, int sign) {
  if (!h.field().is_prime()) throw Error(ErrorCode::kContextMismatch, "curve must be over a prime field");
  Isogeny iso{h, to_odd_model(h), tr, construct(tr, sign), Mobius::identity(h.field())};
  if (!iso.R.plane.rational)
    throw Error(ErrorCode::kNotRational, "leading coefficient of s is not a square");
  iso.to_work = tr.chart.inverse().compose(iso.odd.chart);
  if (!(pullback(tr.curve, iso.to_work) == iso.odd.odd))
    throw Error(ErrorCode::kModelMismatch, "working curve and odd model disagree");
  return iso;
}

std::vector<XPoint> fiber_points(const Correspondence& c, const Fe& t0, int k) {
  const Field& K = make_extension(t0.field().characteristic(), k);
  if (k % t0.field().degree() != 0) throw Error(ErrorCode::kContextMismatch, "t0 is not in F_{p^k}");
  const FiberData fd = fiber_data(c.fib, t0, K);
  std::vector<XPoint> out;
  for (int signs = 0; signs < 4; ++signs) {
    std::array<Fe, 3> ys = fd.ys;
    if (signs & 1) ys[1] = -ys[1];
    if (signs & 2) ys[2] = -ys[2];
    const auto b = interpolate(fd.xs, ys);
    XPoint q{fd.t, coords_from_b(b[0], b[1], b[2])};
    bool rational = true;
    for (const auto& v : q.b) rational = rational && in_subfield(v, k);
    if (!rational) continue;
    out.push_back(map_coords(q, [&](const Fe& a) { return restrict_to(a, K); }));
  }
  return out;
}

int fiber_pair_partition_count(const Fibration& fib, const Fe& t0, int k) {
  const Field& K = make_extension(t0.field().characteristic(), k);
  const FiberData fd = fiber_data(fib, t0, K);
  // points 0..2 are (x_i, y_i), 3..5 their images under the involution
  std::array<Point, 6> pts;
  for (size_t i = 0; i < 3; ++i) {
    pts[i] = {fd.xs[i], fd.ys[i]};
    pts[i + 3] = {fd.xs[i], -fd.ys[i]};
  }
  std::array<int, 6> perm{};
  for (size_t i = 0; i < 6; ++i) {
    const Fe x = frobenius(pts[i].x, K.order()), y = frobenius(pts[i].y, K.order());
    for (size_t j = 0; j < 6; ++j)
      if (pts[j].x == x && pts[j].y == y) perm[i] = static_cast<int>(j);
  }
  int count = 0;
  for (int signs = 0; signs < 4; ++signs) {
    std::array<bool, 6> in_t{};
    in_t[0] = true;
    in_t[(signs & 1) ? 4 : 1] = true;
    in_t[(signs & 2) ? 5 : 2] = true;
    bool same = true, swapped = true;
    for (size_t i = 0; i < 6; ++i) {
      if (!in_t[i]) continue;
      const int j = perm[i];
      same = same && in_t[static_cast<size_t>(j)];
      swapped = swapped && !in_t[static_cast<size_t>(j)];
    }
    if (same || swapped) ++count;
  }
  return count;
}

std::vector<XPoint> phi_on_point(const Correspondence& c, const Point& p) {
  const Fibration& fib = c.fib;
  const Field& F = p.x.field();
  const Fe den = fib.map.D().eval(p.x);
  if (den.is_zero()) throw Error(ErrorCode::kBadSupport, "point maps to t = infinity");
  if (p.y.is_zero()) throw Error(ErrorCode::kBadSupport, "Weierstrass point");
  const Fe t0 = fib.map.N().eval(p.x) / den;
  if (!fib.unramified(t0)) throw Error(ErrorCode::kBadSupport, "point lies over a ramified fiber");
  const Poly q = fib.G.at_t(t0) / Poly(F, {-p.x, F.one()});
  const Field& L = make_extension(F.characteristic(), 4 * F.degree());
  const auto rs = roots(embed(q, L));
  if (rs.size() != 2) throw Error(ErrorCode::kInternal, "fiber does not split");
  const Poly fl = embed(fib.curve.f(), L);
  const Fe xp = embed(p.x, L), yp = embed(p.y, L), tl = embed(t0, L);
  std::array<Fe, 3> xs{xp, rs[0], rs[1]};
  std::array<Fe, 3> ys{yp, *sqrt(fl.eval(rs[0])), *sqrt(fl.eval(rs[1]))};
  std::vector<XPoint> out;
  for (int signs = 0; signs < 4; ++signs) {
    std::array<Fe, 3> yy = ys;
    if (signs & 1) yy[1] = -yy[1];
    if (signs & 2) yy[2] = -yy[2];
    const auto b = interpolate(xs, yy);
    const XPoint pt{tl, coords_from_b(b[0], b[1], b[2])};
    const Fe rho = c.rho(tl, pt.b);
    if (yp * rho == pt.b[kB02] + pt.b[kB12] * xp + pt.b[kB22] * xp * xp) out.push_back(pt);
  }
  if (out.size() != 2) throw Error(ErrorCode::kInternal, "expected two images of a point");
  return out;
}

XDivisor phi_on_effective(const Isogeny& iso, const Mumford& d) {
  const Field& fp = iso.curve.field();
  XDivisor out;
  std::vector<std::pair<XPoint, long>> acc;
  for (const auto& [factor, mult] : factorize(d.a).factors) {
    const int m = factor.degree();
    const Field& fm = make_extension(fp.characteristic(), m);
    const Fe x0 = roots(embed(factor, fm)).front();
    const Point p_odd{x0, embed(d.b, fm).eval(x0)};
    const auto p_work = push_point(p_odd, iso.to_work.embedded(fm));
    if (!p_work) throw Error(ErrorCode::kBadSupport, "point maps to infinity");
    for (const auto& q : phi_on_point(iso.R, *p_work)) {
      const XPoint rep = canonical_orbit_rep(q);
      auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& e) { return e.first == rep; });
      if (it == acc.end()) acc.push_back({rep, static_cast<long>(m) * mult});
      else it->second += static_cast<long>(m) * mult;
    }
  }
  for (const auto& [rep, n] : acc) {
    const long size = rep.field().degree();
    if (n % size != 0) throw Error(ErrorCode::kInternal, "image is not Galois stable");
    out.add(rep, n / size);
  }
  return out;
}

namespace {

std::uint64_t class_hash(const DivisorClass& d) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const Poly* p : {&d.a, &d.b})
    for (const auto& c : p->coeffs()) {
      h ^= c.coeff(0).get_ui();
      h *= 0x100000001b3ull;
    }
  return h;
}

}  // namespace

namespace {

bool good_point(const Isogeny& iso, const Point& p_odd) {
  const auto w = push_point(p_odd, iso.to_work);
  if (!w || w->y.is_zero()) return false;
  const Fe den = iso.R.fib.map.D().eval(w->x);
  return !den.is_zero() && iso.R.fib.unramified(iso.R.fib.map.N().eval(w->x) / den);
}

// Sum of three rational points of good support, minus 3 infinity.
std::optional<Mumford> good_auxiliary(const Isogeny& iso, Rng& rng) {
  const HCurve& odd = iso.odd.odd;
  Mumford e = identity(odd);
  for (int i = 0; i < 3; ++i) {
    std::optional<Point> p;
    for (int tries = 0; tries < 64 && !p; ++tries) {
      p = random_point(odd, rng);
      if (p && !good_point(iso, *p)) p.reset();
    }
    if (!p) return std::nullopt;
    e = cantor_add(odd, e, point_class(*p));
  }
  return e;
}

}  // namespace

XDivisor phi_on_class(const Isogeny& iso, const DivisorClass& d, std::uint64_t seed) {
  Rng rng(seed ^ class_hash(d));
  const HCurve& odd = iso.odd.odd;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const auto e = good_auxiliary(iso, rng);
    if (!e) break;
    const Mumford a = cantor_add(odd, d, *e);
    if (a.a.degree() != 3 || e->a.degree() != 3) continue;
    try {
      return phi_on_effective(iso, a) + -phi_on_effective(iso, *e);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kBadSupport) throw;
    }
  }
  throw Error(ErrorCode::kBadSupport, "no representative with good support after 16 attempts");
}

DivisorClass reverse_on_point(const Isogeny& iso, const XPoint& q) {
  const Field& k = q.field();
  const Poly a = iso.R.fib.G.at_t(q.t);
  const Fe rho = iso.R.rho(q.t, q.b);
  const Poly b = Poly(k, {q.b[kB02], q.b[kB12], q.b[kB22]}) * rho.inverse();
  const Mumford on_odd = pull_ideal({a, b}, iso.to_work.embedded(k));
  const HCurve odd_k = iso.odd.odd.embedded(k);
  if (!is_valid(odd_k, on_odd)) throw Error(ErrorCode::kInternal, "pulled ideal is not on the curve");
  return restrict_to(galois_trace(odd_k, reduce(odd_k, on_odd)), iso.curve.field());
}

DivisorClass reverse_on_xdivisor(const Isogeny& iso, const XDivisor& dx) {
  const HCurve& odd = iso.odd.odd;
  Mumford acc = identity(odd);
  for (const auto& [q, w] : dx.terms) {
    Mumford c = reverse_on_point(iso, q);
    if (w < 0) c = negate(c);
    acc = cantor_add(odd, acc, cantor_mul(odd, c, std::abs(w)));
  }
  return acc;
}

std::string to_string(RoundTrip r) {
  switch (r) {
    case RoundTrip::kPlus2: return "+2";
    case RoundTrip::kMinus2: return "-2";
    case RoundTrip::kBoth: return "+-2";
    case RoundTrip::kMismatch: return "mismatch";
  }
  return "mismatch";
}

RoundTrip roundtrip(const Isogeny& iso, const DivisorClass& d, std::uint64_t seed) {
  const HCurve& odd = iso.odd.odd;
  const Mumford r = reverse_on_xdivisor(iso, phi_on_class(iso, d, seed));
  const Mumford two = cantor_mul(odd, d, 2);
  const bool plus = r == two, minus = r == negate(two);
  if (plus && minus) return RoundTrip::kBoth;
  if (plus) return RoundTrip::kPlus2;
  if (minus) return RoundTrip::kMinus2;
  return RoundTrip::kMismatch;
}

mpz_class count_X_open(const Correspondence& c, int k) {
  const Field& fp = c.fib.curve.field();
  const Field& K = make_extension(fp.characteristic(), k);
  if (K.order() > mpz_class(1) << 20) throw Error(ErrorCode::kTooLarge, "field too large to enumerate");
  const unsigned long n = K.order().get_ui();
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  std::atomic<unsigned long> next{0};
  std::vector<unsigned long> partial(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (unsigned long i; (i = next.fetch_add(1)) < n;) {
        std::vector<mpz_class> coeffs;
        unsigned long v = i;
        const unsigned long p = fp.characteristic().get_ui();
        for (int j = 0; j < k; ++j, v /= p) coeffs.push_back(v % p);
        const Fe t0 = K.from_coeffs(std::move(coeffs));
        if (!c.fib.unramified(t0)) continue;
        partial[w] += fiber_points(c, t0, k).size();
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return std::accumulate(partial.begin(), partial.end(), mpz_class(0),
                         [](mpz_class a, unsigned long b) { return a + b; });
}

}  // namespace trigonal

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

// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion; pass
// criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"
#include "trigonal/io.hpp"
#include "trigonal/report.hpp"

namespace trigonal {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed sub-checks; the first few are kept for the report line.
class Checks {
 public:
  void require(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    std::string d = summary;
    if (failed_ > 0) {
      d += "; " + std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed:";
      for (const auto& n : notes_) d += " [" + n + "]";
    }
    return {failed_ == 0, d};
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> notes_;
};

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

const Field& F37() { return make_extension(37, 1); }

HCurve sample_curve() { return curve_from_json(read_json_file(std::string(TRIGONAL_TEST_DATA) + "/curve37.json")); }

TrigonalMap sample_map() {
  const Field& f = F37();
  return {f.element(16), f.element(22), f.element(32), f.element(18)};
}

Poly T(std::vector<long> c) { return Poly::from_ints(F37(), c); }

Point pt(long x, long y) { return {F37().element(x), F37().element(y)}; }

std::vector<BinaryForm> sorted(std::vector<BinaryForm> v) {
  std::sort(v.begin(), v.end(), [](const BinaryForm& a, const BinaryForm& b) { return canonical_less(a, b); });
  return v;
}

// 1

Outcome enumeration() {
  Checks c;
  const HCurve h = sample_curve();
  const auto t0 = Clock::now();
  const AnalyzeReport r = analyze(h);
  const double secs = seconds_since(t0);
  c.require(pattern_string(r.pattern) == "6-1-1", "pattern " + pattern_string(r.pattern));
  c.require(r.subgroups.size() == 1, "found " + std::to_string(r.subgroups.size()) + " subgroups");
  if (r.subgroups.size() == 1) {
    const auto& got = r.subgroups[0].factors;
    const Field& k3 = make_extension(37, 3);
    // u v + 20 v^2 and u^2 + xi uv + xi^50100 v^2 for the roots xi of x^3 + 29x^2 + 9x + 13
    std::vector<BinaryForm> expected{{embed(T({20, 1}), k3), 2}};
    for (const auto& xi : roots(embed(T({13, 9, 29, 1}), k3)))
      expected.push_back({Poly(k3, {xi.pow(50100), xi, k3.one()}), 2});
    c.require(got.front().field().degree() == 3, "subgroup field " + got.front().field().label());
    c.require(sorted(got) == sorted(expected), "factor set differs from the expected quadratics");
    c.require(same_subgroups(enumerate_tractable(h), brute_force_tractable(h)), "brute force disagrees");
  }
  c.require(secs < 1.0, "analyze took " + fmt(secs, 3) + " s");
  return c.outcome("1 subgroup {uv+20v^2, 3 conjugate quadratics over F_37^3}, analyze " + fmt(secs, 3) + " s");
}

// 2

Outcome trigonal_map() {
  Checks c;
  const HCurve h = sample_curve();
  const TractableSubgroup s = enumerate_tractable(h).at(0);
  const TrigonalResult tr = trigonal_map_for(s, h);
  c.require(verify_trigonal(tr.map, tr.subgroup), "constructed map fails verify_trigonal");
  c.require(verify_trigonal(sample_map(), s), "(x^3+16x+22, x^2+32x+18) fails verify_trigonal");
  c.require(!verify_trigonal({F37().element(16), F37().element(22), F37().element(32), F37().element(19)}, s),
            "a perturbed map passes");
  return c.outcome("constructed N/D = (" + tr.map.N().to_string() + ")/(" + tr.map.D().to_string() +
                   "), reference map verified");
}

// 3

Outcome construction() {
  Checks c;
  const Fibration fib = build_fibration(sample_map(), sample_curve());
  c.require(fib.G.to_string() == BiPoly({T({22, -18}), T({16, -32}), T({0, -1}), T({1})}).to_string(),
            "G = " + fib.G.to_string());
  const XModel x = build_X(fib);
  const Poly z(F37()), one = T({1}), two = T({2});
  const std::array<std::array<Poly, 7>, 3> eqs{{
      {T({30, 1, 7, 12, 10, 19}), one, z, z, z, T({30, 36}), T({0, 15, 18})},
      {T({17, 19, 23, 15, 26, 5}), z, two, z, z, T({5, 27}), T({15, 2, 32})},
      {T({18, 21, 13, 7, 29, 36}), z, z, two, one, T({0, 2}), T({21, 32, 1})},
  }};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 7; ++j)
      c.require(x.c[i][j] == eqs[i][j], "X equation " + std::to_string(i) + " term " + std::to_string(j));
  const PlaneModel m = build_plane_model(fib);
  c.require(m.delta0 == T({16, 15, 31, 2, 9, 8, 16, 6, 33, 20, 27}), "delta0 = " + m.delta0.to_string("t"));
  c.require(m.delta2 == T({16, 12, 20, 6, 14, 29, 18, 20}), "delta2 = " + m.delta2.to_string("t"));
  c.require(m.delta4 == T({0, 21, 13, 36, 27}), "delta4 = " + m.delta4.to_string("t"));
  const Poly d1 = T({3, 33, 8, 35});
  c.require(m.rational && (m.delta1 == d1 || m.delta1 == -d1), "delta1 = " + m.delta1.to_string("t"));
  return c.outcome("G, three X equations, delta0/2/4 exact; delta1 = " + m.delta1.to_string("t"));
}

// 4

Outcome zeta() {
  Checks c;
  const auto t0 = Clock::now();
  const auto l = l_polynomial(sample_curve());
  const double secs = seconds_since(t0);
  const std::vector<mpz_class> expected{1, 4, -6, -240, -6 * 37, 4 * 37 * 37, 37 * 37 * 37};
  c.require(l == expected, "L-polynomial differs");
  c.require(secs < 60, "took " + fmt(secs, 1) + " s");
  std::ostringstream os;
  for (size_t i = l.size(); i-- > 0;) os << (i + 1 < l.size() ? ", " : "") << l[i];
  return c.outcome("L coefficients (descending) " + os.str() + " in " + fmt(secs, 2) + " s");
}

// 5

Outcome dlp_relation() {
  Checks c;
  const auto t0 = Clock::now();
  const HCurve h = sample_curve();
  const Mumford d = class_from_points(h, {pt(10, 28)}, {pt(14, 6)});
  const Mumford d2 = class_from_points(h, {pt(19, 28)}, {pt(36, 13)});
  c.require(cantor_mul(h, d, 22359) == d2, "D' != [22359] D");
  const Isogeny iso = make_isogeny(h, trigonal_map_for(enumerate_tractable(h).at(0), h));
  const RoundTrip r = roundtrip(iso, d);
  c.require(r == RoundTrip::kPlus2 || r == RoundTrip::kMinus2, "roundtrip on D gave " + to_string(r));
  Rng rng(20260);
  int agree = 0, torsion = 0;
  for (int i = 0; i < 20; ++i) {
    const Mumford e = random_class(iso.odd.odd, rng);
    const RoundTrip re = roundtrip(iso, e, rng());
    if (cantor_mul(iso.odd.odd, e, 2).is_identity()) {
      ++torsion;
      c.require(re == RoundTrip::kBoth, "2-torsion class gave " + to_string(re));
    } else {
      agree += re == r;
      c.require(re == r, "random class gave " + to_string(re));
    }
  }
  const double secs = seconds_since(t0);
  c.require(secs < 60, "took " + fmt(secs, 1) + " s");
  return c.outcome("D' = [22359]D; roundtrip(D) = " + to_string(r) + ", " + std::to_string(agree) +
                   " random classes agree (" + std::to_string(torsion) + " 2-torsion), " + fmt(secs, 2) + " s");
}

// 6

Outcome count_table() {
  Checks c;
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::vector<int>, int>> rows{
      {{8}, 1}, {{6, 2}, 1}, {{6, 1, 1}, 1}, {{4, 2, 1, 1}, 1},
      {{4, 2, 2}, 3}, {{4, 1, 1, 1, 1}, 3}, {{3, 3, 2}, 3}, {{3, 3, 1, 1}, 3},
      {{4, 4}, 5}, {{2, 2, 2, 1, 1}, 7}, {{2, 2, 1, 1, 1, 1}, 9}, {{2, 1, 1, 1, 1, 1, 1}, 15},
      {{2, 2, 2, 2}, 25}, {{1, 1, 1, 1, 1, 1, 1, 1}, 105},
      {{7, 1}, 0}, {{5, 3}, 0}, {{4, 3, 1}, 0}};
  const Field& f = make_extension(1009, 1);
  Rng rng(1009);
  for (const auto& [pattern, expected] : rows) {
    const HCurve h = random_curve_with_pattern(f, pattern, rng);
    const std::string name = pattern_string(pattern);
    c.require(factor_pattern(h) == pattern, name + ": wrong pattern");
    const auto subs = enumerate_tractable(h);
    c.require(static_cast<int>(subs.size()) == expected, name + ": " + std::to_string(subs.size()));
    c.require(same_subgroups(subs, brute_force_tractable(h)), name + ": brute force disagrees");
  }
  const double secs = seconds_since(t0);
  c.require(secs < 300, "took " + fmt(secs, 1) + " s");
  return c.outcome(std::to_string(rows.size()) + " patterns over F_1009 match the table and brute force, " +
                   fmt(secs, 1) + " s");
}

// 7

Outcome expectation_values() {
  Checks c;
  const std::string a = expectation(mpq_class(1, 4)).decimal(4), b = expectation(mpq_class(1, 2)).decimal(4);
  c.require(a == "0.1857", "E(1/4) = " + a);
  c.require(b == "0.3113", "E(1/2) = " + b);
  return c.outcome("E(1/4) = " + a + ", E(1/2) = " + b);
}

// 8

Outcome survey() {
  Checks c;
  SurveyConfig cfg;
  cfg.p = prime_with_bits(30);
  cfg.samples = 20000;
  cfg.seed = 2026;
  const auto t0 = Clock::now();
  const SurveyStats s = run_survey(cfg);
  const double secs = seconds_since(t0);
  auto within = [&](const Fraction& f, double target, double tol, const char* name) {
    c.require(std::fabs(f.value() - target) <= tol, std::string(name) + " = " + f.decimal(4));
  };
  within(s.subgroup_fraction(), 0.50, 0.02, "subgroup");
  within(s.trigonal_fraction(), 0.50, 0.02, "trigonal");
  within(s.isogeny_fraction(), 0.50, 0.02, "isogeny");
  within(s.success_fraction(), 0.186, 0.015, "success");
  c.require(secs < 1800, "took " + fmt(secs, 0) + " s");
  return c.outcome("p = " + cfg.p.get_str() + ", N = 20000: " + s.subgroup_fraction().decimal(4) + " / " +
                   s.trigonal_fraction().decimal(4) + " / " + s.isogeny_fraction().decimal(4) + " / " +
                   s.success_fraction().decimal(4) + " in " + fmt(secs, 0) + " s");
}

// 9

struct Construction {
  HCurve h;
  TractableSubgroup s;
  TrigonalResult tr;
};

Outcome property_suite() {
  Checks c;
  std::vector<std::string> parts;

  // (a) subgroup elements
  {
    const Field& f = make_extension(1009, 1);
    Rng rng(91);
    int subgroups = 0;
    for (const auto& pattern : partitions_of(8)) {
      if (count_for_pattern(pattern) == 0) continue;
      const HCurve h = random_curve_with_pattern(f, pattern, rng);
      for (const auto& s : enumerate_tractable(h)) {
        const auto el = subgroup_elements(s, h);
        const HCurve& odd = el.model.odd;
        Mumford prod = identity(odd);
        for (const auto& g : el.generators) prod = cantor_add(odd, prod, g);
        std::set<std::string> distinct;
        bool order2 = true;
        for (const auto& e : el.elements) {
          distinct.insert(e.to_string());
          order2 = order2 && cantor_add(odd, e, e).is_identity();
        }
        c.require(el.elements.size() == 8 && distinct.size() == 8 && order2 && prod.is_identity(),
                  "(a) " + pattern_string(pattern));
        ++subgroups;
      }
    }
    parts.push_back("(a) " + std::to_string(subgroups) + " subgroups");
  }

  // (b) trigonal map exists iff the discriminant is a square; (c) exact square root
  std::vector<Construction> constructions;
  {
    const Field& f = make_extension(101, 1);
    Rng rng(92);
    int total = 0, square = 0, succeeded = 0, mismatched = 0, involution = 0, fibrations = 0;
    while (total < 1000) {
      const HCurve h = random_curve(f, rng);
      for (const auto& s : enumerate_tractable(h)) {
        ++total;
        std::optional<bool> disc_square;
        try {
          const MMatrix m = build_M(s);
          disc_square = is_square(rationality_discriminant(m.alpha, m.beta));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kDegenerateConfiguration) throw;
        }
        bool ok = false;
        try {
          const TrigonalResult tr = trigonal_map_for(s, h);
          ok = true;
          try {
            build_fibration(tr.map, tr.curve);
            ++fibrations;
          } catch (const Error& e) {
            c.require(false, std::string("(c) ") + e.what());
          }
          if (constructions.size() < 5) constructions.push_back({h, s, tr});
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kDegenerateConfiguration) ++involution;
          else if (e.code() != ErrorCode::kNotRational) throw;
        }
        square += disc_square.value_or(false);
        succeeded += ok;
        if (!disc_square || *disc_square != ok) ++mismatched;
      }
    }
    c.require(mismatched == 0, "(b) " + std::to_string(mismatched) + " of " + std::to_string(total) +
                                   " subgroups: map exists != discriminant square (" + std::to_string(involution) +
                                   " with every transversal meeting the twisted cubic)");
    parts.push_back("(b) " + std::to_string(total) + " subgroups, " + std::to_string(square) + " square, " +
                    std::to_string(succeeded) + " maps");
    parts.push_back("(c) " + std::to_string(fibrations) + " fibrations");
  }

  // (d) quartic identity
  {
    int checked_constructions = 0, min_points = 1 << 30;
    for (size_t i = 0; i < constructions.size() && checked_constructions < 5; ++i) {
      const Correspondence corr = construct(constructions[i].tr);
      const Field& fp = corr.fib.curve.field();
      int points = 0;
      for (int k = 1; k <= 2 && points < 100; ++k) {
        for (long t = 0; t < 101 && points < 100; ++t) {
          const Fe t0 = fp.element(t);
          if (!corr.fib.unramified(t0)) continue;
          for (const auto& q : fiber_points(corr, t0, k)) {
            const Fe r = corr.rho(q.t, q.b);
            c.require(corr.x.contains(q.t, q.b) && corr.plane.residual(q.t, q.b[kB22]).is_zero() &&
                          r * r == embed(q.b[kB22], r.field()),
                      "(d) quartic identity");
            ++points;
          }
        }
      }
      c.require(points >= 100, "(d) only " + std::to_string(points) + " points");
      min_points = std::min(min_points, points);
      ++checked_constructions;
    }
    c.require(checked_constructions == 5, "(d) not enough constructions");
    parts.push_back("(d) " + std::to_string(checked_constructions) + " constructions, >= " +
                    std::to_string(min_points) + " points each");
  }

  // (e) twist antisymmetry
  {
    const Field& f = make_extension(1009, 1);
    Rng rng(95);
    int triples = 0;
    while (triples < 200) {
      const HCurve h = random_curve(f, rng);
      for (const auto& s : enumerate_tractable(h)) {
        TrigonalResult tr;
        try {
          tr = trigonal_map_for(s, h);
        } catch (const Error&) {
          continue;
        }
        const HCurve tw = tr.curve.twist(f.nonresidue());
        const bool a = isogeny_is_rational(build_fibration(tr.map, tr.curve));
        const bool b = isogeny_is_rational(build_fibration(tr.map, tw));
        c.require(a != b, "(e) " + h.to_string());
        ++triples;
      }
    }
    parts.push_back("(e) " + std::to_string(triples) + " triples");
  }

  // (f) round trip on odd-order classes and on the rational kernel
  {
    const Field& f = make_extension(101, 1);
    Rng curves(96);
    int used = 0, classes = 0, kernel = 0;
    for (int tries = 0; used < 20 && tries < 2000; ++tries) {
      const HCurve h = random_curve(f, curves);
      if (roots(h.f()).empty()) continue;
      const auto subs = enumerate_tractable(h);
      if (subs.empty()) continue;
      Construction con{h, subs.front(), {}};
      Isogeny iso;
      try {
        con.tr = trigonal_map_for(con.s, h);
        iso = make_isogeny(h, con.tr);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNotRational && e.code() != ErrorCode::kDegenerateConfiguration) throw;
        continue;
      }
      ++used;
      const HCurve& odd = iso.odd.odd;
      const auto l = l_polynomial(con.h);
      mpz_class order = 0;
      for (const auto& x : l) order += x;
      mpz_class two_part = 1;
      while (mpz_divisible_2exp_p(order.get_mpz_t(), mpz_sizeinbase(two_part.get_mpz_t(), 2))) two_part *= 2;
      Rng rng(900 + used);
      std::optional<RoundTrip> consensus;
      for (int i = 0; i < 5; ++i) {
        Mumford d;
        for (int tries = 0; tries < 50 && (tries == 0 || d.is_identity()); ++tries)
          d = cantor_mul(odd, random_class(odd, rng), two_part);
        if (d.is_identity()) continue;
        const RoundTrip r = roundtrip(iso, d, rng());
        c.require(r == RoundTrip::kPlus2 || r == RoundTrip::kMinus2, "(f) roundtrip gave " + to_string(r));
        if (!consensus) consensus = r;
        c.require(r == *consensus, "(f) no consensus");
        ++classes;
      }
      const auto el = subgroup_elements(con.s, con.h);
      const Field& fp = con.h.field();
      for (const auto& e : el.elements) {
        bool rational = true;
        for (const auto& x : e.a.coeffs()) rational = rational && x.in_prime_field();
        for (const auto& x : e.b.coeffs()) rational = rational && x.in_prime_field();
        if (!rational) continue;
        const Mumford s{restrict_to(e.a, fp), e.b.is_zero() ? Poly(fp) : restrict_to(e.b, fp)};
        c.require(is_valid(odd, s), "(f) kernel element not on the odd model");
        c.require(reverse_on_xdivisor(iso, phi_on_class(iso, s)).is_identity(), "(f) kernel element survives");
        ++kernel;
      }
    }
    c.require(used >= 20 && classes >= 100, "(f) " + std::to_string(used) + " constructions, " +
                                                std::to_string(classes) + " classes");
    parts.push_back("(f) " + std::to_string(classes) + " classes over " + std::to_string(used) +
                    " constructions, " + std::to_string(kernel) + " rational kernel elements");
  }

  std::string summary;
  for (const auto& p : parts) summary += (summary.empty() ? "" : "; ") + p;
  return c.outcome(summary);
}

// 10

Outcome performance() {
  Checks c;
  const Field& f = Field::prime(prime_with_bits(160));
  Rng rng(160);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const HCurve h = random_curve_with_pattern(f, {6, 1, 1}, rng);
    const auto t0 = Clock::now();
    try {
      const TrigonalResult tr = trigonal_map_for(enumerate_tractable(h).at(0), h);
      const Correspondence corr = construct(tr);
      const double secs = seconds_since(t0);
      c.require(secs < 60, "took " + fmt(secs, 1) + " s");
      c.require(verify_trigonal(tr.map, tr.subgroup), "map does not verify");
      return c.outcome("160-bit p = " + f.characteristic().get_str() + ": subgroups, map and X in " +
                       fmt(secs, 2) + " s (attempt " + std::to_string(attempt + 1) + ")");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotRational) throw;
    }
  }
  return {false, "no rational trigonal map in 20 curves"};
}

}  // namespace
}  // namespace trigonal

int main(int argc, char** argv) {
  using namespace trigonal;
  const std::vector<std::function<Outcome()>> criteria{
      enumeration, trigonal_map, construction, zeta, dlp_relation,
      count_table, expectation_values, survey, property_suite, performance};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(n)) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

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

#include "trigonal/tractable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "trigonal/embedding.hpp"
#include "trigonal/error.hpp"

namespace trigonal {

namespace {

struct Orbit {
  BinaryForm g;  // F_p-irreducible factor of F~ (v has affine part 1)
  int length;
  // lazily filled
  std::optional<Fe> root;                     // in F_{p^length}
  std::optional<std::vector<BinaryForm>> self;  // self-paired quadratics
};

void sort_forms(std::vector<BinaryForm>& v) {
  std::sort(v.begin(), v.end(), [](const BinaryForm& a, const BinaryForm& b) { return canonical_less(a, b); });
}

const Fe& orbit_root(Orbit& o) {
  if (!o.root) {
    const Field& k = make_extension(o.g.field().characteristic(), o.length);
    o.root = roots(embed(o.g.affine, k)).front();
  }
  return *o.root;
}

const std::vector<BinaryForm>& self_pairs(Orbit& o) {
  if (!o.self) {
    std::vector<BinaryForm> out;
    if (o.length == 2) {
      out.push_back(o.g);
    } else {
      const Field& k = make_extension(o.g.field().characteristic(), o.length / 2);
      for (auto& q : equal_degree(embed(o.g.affine, k), 2)) out.push_back({std::move(q), 2});
    }
    o.self = std::move(out);
  }
  return *o.self;
}

std::vector<BinaryForm> cross_pairs(Orbit& a, Orbit& b, int shift) {
  if (a.length == 1) return {a.g * b.g};
  const Fe r = orbit_root(a);
  const Fe s = orbit_root(b).frobenius(shift);
  const Field& k = r.field();
  const Poly q0 = Poly(k, {-r, k.one()}) * Poly(k, {-s, k.one()});
  std::vector<BinaryForm> out;
  for (int i = 0; i < a.length; ++i) out.push_back({q0.frobenius(i), 2});
  return out;
}

TractableSubgroup assemble(const std::vector<std::vector<BinaryForm>>& parts, const Fe& scale) {
  int e = 1;
  for (const auto& part : parts) e = std::lcm(e, part.front().field().degree());
  const Field& k = make_extension(scale.field().characteristic(), e);
  TractableSubgroup s;
  for (const auto& part : parts)
    for (const auto& q : part) s.factors.push_back(BinaryForm{embed(q.affine, k), 2}.normalized());
  sort_forms(s.factors);
  s.scale = scale;
  return s;
}

std::vector<Orbit> orbits_of(const HCurve& h) {
  std::vector<Orbit> out;
  for (auto& [g, m] : factorize_form(h.form()).factors) out.push_back({g, g.degree, {}, {}});
  return out;
}

}  // namespace

std::vector<BinaryForm> TractableSubgroup::key(const Field& big) const {
  std::vector<BinaryForm> out;
  for (const auto& q : factors) out.push_back(BinaryForm{embed(q.affine, big), 2}.normalized());
  sort_forms(out);
  return out;
}

std::vector<int> factor_pattern(const HCurve& h) {
  return factorize_form(h.form()).degree_pattern();
}

std::string pattern_string(const std::vector<int>& pattern) {
  std::string s;
  for (size_t i = 0; i < pattern.size(); ++i) s += (i ? "-" : "") + std::to_string(pattern[i]);
  return s;
}

std::vector<TractableSubgroup> enumerate_tractable(const HCurve& h) {
  std::vector<Orbit> orbits = orbits_of(h);
  std::map<int, int> by_length;
  for (const auto& o : orbits) ++by_length[o.length];
  for (const auto& [len, count] : by_length)
    if (len % 2 == 1 && count % 2 == 1) return {};
  const Fe scale = h.f().lead();
  std::vector<TractableSubgroup> out;
  std::vector<bool> used(orbits.size(), false);
  std::vector<std::vector<BinaryForm>> parts;
  std::function<void()> rec = [&]() {
    size_t i = 0;
    while (i < orbits.size() && used[i]) ++i;
    if (i == orbits.size()) {
      out.push_back(assemble(parts, scale));
      return;
    }
    used[i] = true;
    if (orbits[i].length % 2 == 0) {
      parts.push_back(self_pairs(orbits[i]));
      rec();
      parts.pop_back();
    }
    for (size_t j = i + 1; j < orbits.size(); ++j) {
      if (used[j] || orbits[j].length != orbits[i].length) continue;
      used[j] = true;
      for (int shift = 0; shift < orbits[i].length; ++shift) {
        parts.push_back(cross_pairs(orbits[i], orbits[j], shift));
        rec();
        parts.pop_back();
      }
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
  return out;
}

int splitting_degree(const HCurve& h) {
  int l = 1;
  for (int d : factor_pattern(h)) l = std::lcm(l, d);
  return l;
}

std::vector<TractableSubgroup> brute_force_tractable(const HCurve& h) {
  const int l = splitting_degree(h);
  if (l > 15) throw Error(ErrorCode::kTooLarge, "splitting field degree " + std::to_string(l));
  const Field& k = make_extension(h.field().characteristic(), l);
  // nullopt is the point at infinity
  std::vector<std::optional<Fe>> pts;
  for (const auto& r : roots(embed(h.f(), k))) pts.emplace_back(r);
  if (h.degree() == 7) pts.emplace_back(std::nullopt);
  if (pts.size() != 8) throw Error(ErrorCode::kInternal, "expected 8 Weierstrass points");
  std::vector<int> sigma(8);
  for (int i = 0; i < 8; ++i) {
    if (!pts[i]) {
      sigma[i] = i;
      continue;
    }
    const Fe img = pts[i]->frobenius();
    for (int j = 0; j < 8; ++j)
      if (pts[j] && *pts[j] == img) sigma[i] = j;
  }
  auto form_of = [&](int a, int b) {
    if (!pts[a]) std::swap(a, b);
    if (!pts[b]) return BinaryForm{Poly(k, {-*pts[a], k.one()}), 2};
    return BinaryForm{Poly(k, {-*pts[a], k.one()}) * Poly(k, {-*pts[b], k.one()}), 2};
  };
  std::vector<TractableSubgroup> out;
  std::vector<int> mate(8, -1);
  int total = 0;
  std::function<void()> rec = [&]() {
    int a = 0;
    while (a < 8 && mate[a] >= 0) ++a;
    if (a == 8) {
      ++total;
      for (int i = 0; i < 8; ++i)
        if (mate[sigma[i]] != sigma[mate[i]]) return;
      TractableSubgroup s;
      for (int i = 0; i < 8; ++i)
        if (i < mate[i]) s.factors.push_back(form_of(i, mate[i]).normalized());
      sort_forms(s.factors);
      s.scale = h.f().lead();
      out.push_back(std::move(s));
      return;
    }
    for (int b = a + 1; b < 8; ++b) {
      if (mate[b] >= 0) continue;
      mate[a] = b;
      mate[b] = a;
      rec();
      mate[a] = mate[b] = -1;
    }
  };
  rec();
  if (total != 105) throw Error(ErrorCode::kInternal, "pairing enumeration incomplete");
  return out;
}

bool same_subgroups(const std::vector<TractableSubgroup>& a, const std::vector<TractableSubgroup>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  int e = 1;
  for (const auto& s : a) e = std::lcm(e, s.field().degree());
  for (const auto& s : b) e = std::lcm(e, s.field().degree());
  const Field& big = make_extension(a.front().field().characteristic(), e);
  auto keys = [&](const std::vector<TractableSubgroup>& v) {
    std::vector<std::vector<BinaryForm>> out;
    for (const auto& s : v) out.push_back(s.key(big));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [](const BinaryForm& p, const BinaryForm& q) { return canonical_less(p, q); });
    });
    return out;
  };
  return keys(a) == keys(b);
}

bool is_valid_subgroup(const TractableSubgroup& s, const HCurve& h) {
  if (s.factors.size() != 4) return false;
  const Field& k = s.field();
  Poly prod = Poly::constant(embed(s.scale, k));
  for (const auto& q : s.factors) {
    if (q.degree != 2 || &q.field() != &k) return false;
    prod *= q.affine;
  }
  if (prod != embed(h.f(), k)) return false;
  int v_count = 0;
  for (const auto& q : s.factors) v_count += q.v_multiplicity();
  if (v_count != 8 - h.degree()) return false;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (gcd(s.factors[i].affine, s.factors[j].affine).degree() > 0) return false;
  std::vector<BinaryForm> conj;
  for (const auto& q : s.factors) conj.push_back({q.affine.frobenius(), 2});
  sort_forms(conj);
  return conj == s.factors;
}

int count_for_pattern(std::vector<int> pattern) {
  int sum = 0;
  for (int d : pattern) {
    if (d <= 0) throw Error(ErrorCode::kNotAPartitionOf8, "parts must be positive");
    sum += d;
  }
  if (sum != 8) throw Error(ErrorCode::kNotAPartitionOf8, "parts sum to " + std::to_string(sum));
  std::sort(pattern.rbegin(), pattern.rend());
  static const std::map<std::vector<int>, int> table = {
      {{8}, 1},
      {{6, 2}, 1},
      {{6, 1, 1}, 1},
      {{4, 2, 1, 1}, 1},
      {{4, 2, 2}, 3},
      {{4, 1, 1, 1, 1}, 3},
      {{3, 3, 2}, 3},
      {{3, 3, 1, 1}, 3},
      {{4, 4}, 5},
      {{2, 2, 2, 1, 1}, 7},
      {{2, 2, 1, 1, 1, 1}, 9},
      {{2, 1, 1, 1, 1, 1, 1}, 15},
      {{2, 2, 2, 2}, 25},
      {{1, 1, 1, 1, 1, 1, 1, 1}, 105},
  };
  auto it = table.find(pattern);
  return it == table.end() ? 0 : it->second;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

mpq_class pattern_weight(const std::vector<int>& pattern) {
  std::map<int, int> nu;
  for (int d : pattern) ++nu[d];
  mpz_class den = 1;
  for (const auto& [n, v] : nu) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(v));
    den *= f * pw;
  }
  return mpq_class(1, den);
}

std::string ExpectationResult::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = value * scale + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = r.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  return s;
}

ExpectationResult expectation(const mpq_class& success_prob) {
  if (success_prob < 0 || success_prob > 1)
    throw Error(ErrorCode::kParseError, "success probability must lie in [0, 1]");
  mpq_class total = 0;
  const mpq_class fail = 1 - success_prob;
  for (const auto& t : partitions_of(8)) {
    const int s = count_for_pattern(t);
    mpq_class fail_all = 1;
    for (int i = 0; i < s; ++i) fail_all *= fail;
    total += (1 - fail_all) * pattern_weight(t);
  }
  total.canonicalize();
  return {total};
}

HCurve random_curve_with_pattern(const Field& fp, const std::vector<int>& pattern, Rng& rng,
                                 bool infinity) {
  int sum = 0;
  for (int d : pattern) sum += d;
  if (sum != 8) throw Error(ErrorCode::kNotAPartitionOf8, "pattern must sum to 8");
  bool v_used = !infinity;
  if (infinity && std::find(pattern.begin(), pattern.end(), 1) == pattern.end())
    throw Error(ErrorCode::kInvalidCurve, "a point at infinity needs a linear factor");
  while (true) {
    Poly f = Poly::constant(fp.random(rng));
    if (f.is_zero()) continue;
    bool placed_v = v_used;
    for (int d : pattern) {
      if (d == 1 && !placed_v) {
        placed_v = true;
        continue;
      }
      while (true) {
        std::vector<Fe> c;
        for (int i = 0; i < d; ++i) c.push_back(fp.random(rng));
        c.push_back(fp.one());
        Poly g(fp, c);
        auto fa = factorize(g);
        if (fa.factors.size() == 1 && fa.factors[0].second == 1) {
          f *= g;
          break;
        }
      }
    }
    if (!is_squarefree(f)) continue;
    return HCurve(f);
  }
}

SubgroupElements subgroup_elements(const TractableSubgroup& s, const HCurve& h) {
  const auto pattern = factor_pattern(h);
  const int dmin = *std::min_element(pattern.begin(), pattern.end());
  const int e = std::lcm(s.field().degree(), dmin);
  const Field& k = make_extension(h.field().characteristic(), e);
  SubgroupElements out{to_odd_model(h, &k), {}, {}};
  for (const auto& q : s.factors) out.generators.push_back(two_torsion_from_pair(out.model, q));
  const HCurve& odd = out.model.odd;
  for (int mask = 0; mask < 8; ++mask) {
    Mumford acc = identity(odd);
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) acc = cantor_add(odd, acc, out.generators[static_cast<size_t>(i)]);
    out.elements.push_back(acc);
  }
  return out;
}

}  // namespace trigonal

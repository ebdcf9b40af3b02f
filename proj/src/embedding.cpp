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

#include "trigonal/embedding.hpp"

#include <map>
#include <mutex>

#include "trigonal/error.hpp"
#include "trigonal/linalg.hpp"
#include "trigonal/poly.hpp"

namespace trigonal {

namespace {

struct EmbeddingCache {
  std::mutex mutex;
  std::map<std::pair<const Field*, const Field*>, std::vector<Fe>> powers;
};

EmbeddingCache& cache() {
  static EmbeddingCache c;
  return c;
}

void check_compatible(const Field& small, const Field& large) {
  if (small.characteristic() != large.characteristic() || large.degree() % small.degree() != 0) {
    throw Error(ErrorCode::kContextMismatch, small.label() + " is not a subfield of " + large.label());
  }
}

// theta^i for i < k, theta the image of the generator of `small`.
const std::vector<Fe>& generator_powers(const Field& small, const Field& large) {
  auto& c = cache();
  const auto key = std::make_pair(&small, &large);
  {
    std::lock_guard<std::mutex> lock(c.mutex);
    auto it = c.powers.find(key);
    if (it != c.powers.end()) return it->second;
  }
  std::vector<Fe> m;
  for (const auto& coeff : small.modulus()) m.push_back(large.element(coeff));
  const auto rs = roots(Poly(large, std::move(m)));
  if (rs.empty()) throw Error(ErrorCode::kInternal, "no embedding found");
  std::vector<Fe> pw;
  Fe acc = large.one();
  for (int i = 0; i < small.degree(); ++i) {
    pw.push_back(acc);
    acc *= rs.front();
  }
  std::lock_guard<std::mutex> lock(c.mutex);
  auto [it, inserted] = c.powers.emplace(key, std::move(pw));
  return it->second;
}

}  // namespace

Fe embed(const Fe& a, const Field& target) {
  const Field& src = a.field();
  if (&src == &target) return a;
  check_compatible(src, target);
  if (src.degree() == 1) return target.element(a.coeff(0));
  const auto& pw = generator_powers(src, target);
  Fe r = target.zero();
  for (int i = 0; i < src.degree(); ++i) {
    if (a.coeff(i) != 0) r += pw[static_cast<size_t>(i)] * target.element(a.coeff(i));
  }
  return r;
}

bool in_subfield(const Fe& a, int k) {
  if (a.field().degree() % k != 0) return false;
  if (k == 1) return a.in_prime_field();
  return a.frobenius(k) == a;
}

int minimal_degree(const Fe& a) {
  const int n = a.field().degree();
  for (int d = 1; d < n; ++d)
    if (n % d == 0 && in_subfield(a, d)) return d;
  return n;
}

Fe restrict_to(const Fe& a, const Field& subfield) {
  const Field& src = a.field();
  if (&src == &subfield) return a;
  check_compatible(subfield, src);
  if (subfield.degree() == 1) {
    if (!a.in_prime_field())
      throw Error(ErrorCode::kContextMismatch, "element does not lie in " + subfield.label());
    return subfield.element(a.coeff(0));
  }
  const auto& pw = generator_powers(subfield, src);
  const Field& fp = src.prime_field();
  const int k = subfield.degree();
  const int n = src.degree();
  Matrix m(static_cast<size_t>(n), Row(static_cast<size_t>(k) + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) m[r][c] = fp.element(pw[static_cast<size_t>(c)].coeff(r));
    m[r][k] = fp.element(a.coeff(r));
  }
  const auto pivots = rref(m);
  std::vector<mpz_class> out(static_cast<size_t>(k));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == k)
      throw Error(ErrorCode::kContextMismatch, "element does not lie in " + subfield.label());
    out[static_cast<size_t>(pivots[i])] = m[i][k].coeff(0);
  }
  return subfield.from_coeffs(std::move(out));
}

}  // namespace trigonal

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

// Rational tractable subgroups: Galois-stable partitions of the Weierstrass
// points into four pairs, represented by quadratic factors of F~.

#ifndef TRIGONAL_TRACTABLE_HPP_
#define TRIGONAL_TRACTABLE_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "trigonal/hyperelliptic.hpp"

namespace trigonal {

struct TractableSubgroup {
  /// Four normalized quadratic forms over a common field, canonically sorted.
  std::vector<BinaryForm> factors;
  /// scale * prod(factors) = F~; lies in F_p.
  Fe scale;
  bool rational = true;

  const Field& field() const { return factors.front().field(); }
  /// Factors embedded into `big` and re-sorted; equal keys mean equal
  /// subgroups.
  std::vector<BinaryForm> key(const Field& big) const;
};

/// Degrees of the F_p-irreducible factors of F~, descending.
std::vector<int> factor_pattern(const HCurve& h);
std::string pattern_string(const std::vector<int>& pattern);

/// All F_p-rational tractable subgroups, orbit by orbit.
std::vector<TractableSubgroup> enumerate_tractable(const HCurve& h);
/// Exhaustive search over the 105 pairings in the splitting field.
std::vector<TractableSubgroup> brute_force_tractable(const HCurve& h);
/// Splitting field degree of F~ over F_p.
int splitting_degree(const HCurve& h);
/// Order-independent comparison of two subgroup lists.
bool same_subgroups(const std::vector<TractableSubgroup>& a, const std::vector<TractableSubgroup>& b);
/// Product, coprimality and Frobenius stability.
bool is_valid_subgroup(const TractableSubgroup& s, const HCurve& h);

/// Number of rational tractable subgroups for a factor pattern.
int count_for_pattern(std::vector<int> pattern);
/// Partitions of n, each descending, in reverse lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);
/// Limit weight 1 / prod(nu! n^nu) of a pattern.
mpq_class pattern_weight(const std::vector<int>& pattern);

struct ExpectationResult {
  mpq_class value;
  /// Rounded to the given number of decimals.
  std::string decimal(int digits = 4) const;
};
ExpectationResult expectation(const mpq_class& success_prob = mpq_class(1, 4));

/// Random curve over F_p whose F~ has the given factor pattern. With
/// `infinity` set, one linear factor is v (so deg F = 7).
HCurve random_curve_with_pattern(const Field& fp, const std::vector<int>& pattern, Rng& rng,
                                 bool infinity = false);

struct SubgroupElements {
  OddModel model;                   // over a field containing a Weierstrass point
  std::vector<Mumford> generators;  // one per factor
  std::vector<Mumford> elements;    // the 8 classes
};
SubgroupElements subgroup_elements(const TractableSubgroup& s, const HCurve& h);

}  // namespace trigonal

#endif  // TRIGONAL_TRACTABLE_HPP_

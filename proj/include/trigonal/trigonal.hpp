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

// Trigonal maps x -> N(x)/D(x) identifying the pairs of a tractable
// subgroup, found through lines meeting four lines in P^3.

#ifndef TRIGONAL_TRIGONAL_HPP_
#define TRIGONAL_TRIGONAL_HPP_

#include <array>
#include <optional>

#include "trigonal/linalg.hpp"
#include "trigonal/tractable.hpp"

namespace trigonal {

using Plucker = std::array<Fe, 6>;

/// (c^2 : -cb : b^2 - ac : a^2 : ab : ac) for q = a u^2 + b uv + c v^2.
Plucker plucker_of_pair(const BinaryForm& q);
/// sum_{i=0..5} x_i y_{i+3 mod 6}
Fe plucker_pairing(const Plucker& x, const Plucker& y);
Fe plucker_pairing(const Row& x, const Row& y);

struct MMatrix {
  Matrix rows;      // one row per factor, over the subgroup's field
  Matrix rational;  // reduced F_p basis of the row space
  Row alpha, beta;  // F_p kernel basis
};
/// Throws DegenerateConfiguration unless the kernel is 2-dimensional.
MMatrix build_M(const TractableSubgroup& s);

/// B(a,b)^2 - B(a,a) B(b,b).
Fe rationality_discriminant(const Row& alpha, const Row& beta);

struct TrigonalMap {
  Fe n1, n0, d1, d0;
  Poly N() const;
  Poly D() const;
  friend bool operator==(const TrigonalMap& a, const TrigonalMap& b) {
    return a.n1 == b.n1 && a.n0 == b.n0 && a.d1 == b.d1 && a.d0 == b.d0;
  }
};

struct TrigonalResult {
  TrigonalMap map;
  Fe lambda;
  std::optional<Fe> other_lambda;
  Fe discriminant;
  bool double_root = false;
  Row alpha, beta;
  /// Coordinates the map is expressed in: x_original = chart(x_working).
  Mobius chart;
  HCurve curve;
  TractableSubgroup subgroup;
  int attempts = 1;
};

/// The rational trigonal map for s, using the canonically smaller lambda
/// (or the other root when requested). Throws NotRational when the
/// discriminant is a non-square and Degenerate after 8 failed charts.
TrigonalResult trigonal_map_for(const TractableSubgroup& s, const HCurve& h, bool other_root = false);

/// Curve and subgroup in the coordinates of m.
TractableSubgroup pullback(const TractableSubgroup& s, const Mobius& m);

/// g(x') = g(x'') for both roots of every factor, projectively.
bool verify_trigonal(const TrigonalMap& g, const TractableSubgroup& s);

}  // namespace trigonal

#endif  // TRIGONAL_TRIGONAL_HPP_

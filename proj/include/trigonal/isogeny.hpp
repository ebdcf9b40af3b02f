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

// Evaluation of the isogeny phi = (pi_X)_* (pi_H)^* on divisor classes of H,
// the reverse composition through R, and point counts on X over the
// unramified locus. Classes are F_p-rational and live on the odd model of H.

#ifndef TRIGONAL_ISOGENY_HPP_
#define TRIGONAL_ISOGENY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "trigonal/construction.hpp"

namespace trigonal {

struct XPoint {
  Fe t;
  XCoords b;
  const Field& field() const { return t.field(); }
  friend bool operator==(const XPoint& x, const XPoint& y);
  friend bool operator!=(const XPoint& x, const XPoint& y) { return !(x == y); }
};

/// Coordinates restricted to their smallest field, then the least Galois
/// conjugate in canonical order.
XPoint canonical_orbit_rep(const XPoint& q);
/// Number of distinct Frobenius conjugates of q over F_p.
int orbit_size(const XPoint& q);

/// Integer combination of F_p-Galois orbits of points of X. Each term is an
/// orbit, named by its canonical representative.
struct XDivisor {
  std::vector<std::pair<XPoint, long>> terms;  // sorted, nonzero weights

  /// Number of geometric points counted with weight.
  long degree() const;
  bool is_zero() const { return terms.empty(); }
  void add(const XPoint& orbit_rep, long weight);
  XDivisor operator-() const;
  friend XDivisor operator+(const XDivisor& a, const XDivisor& b);
  friend bool operator==(const XDivisor& a, const XDivisor& b);
};

/// H together with a rational construction for one of its subgroups.
struct Isogeny {
  HCurve curve;            // H as given
  OddModel odd;            // classes are expressed here, over F_p
  TrigonalResult trigonal;
  Correspondence R;
  Mobius to_work;          // x_work = to_work(x_odd)
};

/// Throws NotRational when the construction is not defined over F_p and
/// NoRationalWeierstrassPoint when H has no F_p-rational odd model.
Isogeny make_isogeny(const HCurve& h, const TrigonalResult& tr, int sign = 1);

/// All F_{p^k}-rational points of X above t0 (t0 in a subfield of F_{p^k}).
/// Throws RamifiedFiber outside the unramified locus.
std::vector<XPoint> fiber_points(const Correspondence& c, const Fe& t0, int k);

/// Independent count: Frobenius-stable pairs {T, iota T} of triples in the
/// fiber of H over t0, computed from the points of H alone.
int fiber_pair_partition_count(const Fibration& fib, const Fe& t0, int k);

/// Image of a point of the working curve; the two X-points whose R-triple
/// contains it. Points and result over the point's field.
std::vector<XPoint> phi_on_point(const Correspondence& c, const Point& p_work);

/// Effective degree-3 F_p-rational divisor on the odd model, pushed through R.
XDivisor phi_on_effective(const Isogeny& iso, const Mumford& a);

/// phi(D) by shuffling D = (D + E) - E until both parts have good support.
/// Throws BadSupport after 16 attempts.
XDivisor phi_on_class(const Isogeny& iso, const DivisorClass& d, std::uint64_t seed = 0);

/// The class on the odd model of the R-triple of an X-point.
DivisorClass reverse_on_point(const Isogeny& iso, const XPoint& q);
DivisorClass reverse_on_xdivisor(const Isogeny& iso, const XDivisor& dx);

enum class RoundTrip { kPlus2, kMinus2, kBoth, kMismatch };
std::string to_string(RoundTrip r);

/// reverse(phi(D)) against [2]D and [-2]D.
RoundTrip roundtrip(const Isogeny& iso, const DivisorClass& d, std::uint64_t seed = 0);

/// Sum over unramified t0 in F_{p^k} of the number of F_{p^k}-points of X above t0.
mpz_class count_X_open(const Correspondence& c, int k);

}  // namespace trigonal

#endif  // TRIGONAL_ISOGENY_HPP_

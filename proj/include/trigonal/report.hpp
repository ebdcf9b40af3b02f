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

// Report assembly for the command-line tools and the Python module. Each
// report has a builder, a JSON encoder and a decoder with
// decode(encode(r)) == r and encode(decode(j)) == j for encoded j.

#ifndef TRIGONAL_REPORT_HPP_
#define TRIGONAL_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigonal/io.hpp"
#include "trigonal/survey.hpp"
#include "trigonal/tractable.hpp"

namespace trigonal {

/// Subgroup `index` of enumerate_tractable(h). NoTractableSubgroup when there
/// is none, ParseError when the index is out of range.
TractableSubgroup select_subgroup(const HCurve& h, int index);

struct SubgroupReport {
  std::vector<BinaryForm> factors;
  SubgroupRecord flags;
  friend bool operator==(const SubgroupReport&, const SubgroupReport&) = default;
};

struct AnalyzeReport {
  HCurve curve;
  std::vector<int> pattern;
  std::vector<SubgroupReport> subgroups;
  friend bool operator==(const AnalyzeReport&, const AnalyzeReport&) = default;
};
AnalyzeReport analyze(const HCurve& h);
Json to_json(const AnalyzeReport& r);
AnalyzeReport analyze_report_from_json(const Json& j);

struct ZetaSummary {
  std::vector<mpz_class> counts;        // #H(F_{p^k}), k = 1, 2, 3
  std::vector<mpz_class> l_polynomial;  // ascending
  friend bool operator==(const ZetaSummary&, const ZetaSummary&) = default;
};

struct RoundTripSummary {
  int plus2 = 0, minus2 = 0, both = 0, mismatch = 0;
  /// "+2", "-2", "undetermined" (only 2-torsion) or "inconsistent".
  std::string consensus() const;
  void add(RoundTrip r);
  friend bool operator==(const RoundTripSummary&, const RoundTripSummary&) = default;
};

struct FiberCheck {
  Fe t0;
  int k = 1;
  int points = 0;  // fiber_points
  int oracle = 0;  // fiber_pair_partition_count
  bool agree() const { return points == oracle; }
  friend bool operator==(const FiberCheck&, const FiberCheck&) = default;
};

struct VerifyOptions {
  int trials = 5;     // random classes and fibers per extension degree
  int ext = 1;        // fiber checks over F_{p^k}, k <= ext
  std::uint64_t seed = 0;
};

struct VerificationSummary {
  std::optional<ZetaSummary> zeta;
  std::optional<RoundTripSummary> roundtrip;
  std::vector<FiberCheck> fibers;
  std::vector<std::string> skipped;  // reasons for missing parts
  bool ok() const;
  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

/// Brute-force zeta data is computed only up to this many elements of F_{p^3}.
constexpr long kZetaLimit = 1L << 24;

struct IsogenyReport {
  HCurve curve;
  int subgroup = 0;
  int sign = 1;
  std::vector<BinaryForm> factors;
  TrigonalMap map;
  Fe lambda;
  Mobius chart;  // x_curve = chart(x_map)
  Poly g0, g1, g2, f0, f1, f2, s, r;
  Fe alpha;
  Poly delta0, delta2, delta4, delta1;
  std::array<std::array<Poly, 7>, 3> x_model;
  bool isogeny_rational = false;
  std::optional<VerificationSummary> verification;
  friend bool operator==(const IsogenyReport&, const IsogenyReport&) = default;
};
/// Verification is skipped when `verify` is null.
IsogenyReport isogeny_report(const HCurve& h, int subgroup, int sign, const VerifyOptions* verify);
VerificationSummary verify_construction(const HCurve& h, const TrigonalResult& tr, int sign,
                                        const VerifyOptions& opt);
Json to_json(const IsogenyReport& r);
IsogenyReport isogeny_report_from_json(const Json& j);

struct VerifyReport {
  HCurve curve;
  int subgroup = 0;
  int sign = 1;
  VerificationSummary summary;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};
VerifyReport verify_report(const HCurve& h, int subgroup, int sign, const VerifyOptions& opt);
Json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const Json& j);

struct MapReport {
  HCurve curve;
  int subgroup = 0;
  int sign = 1;
  std::uint64_t seed = 0;
  DivisorInput divisor;
  DivisorClass divisor_class;  // on the odd model
  XDivisor image;
  friend bool operator==(const MapReport&, const MapReport&) = default;
};
MapReport map_report(const HCurve& h, const DivisorInput& d, int subgroup, int sign, std::uint64_t seed);
Json to_json(const MapReport& r);
MapReport map_report_from_json(const Json& j);

struct SurveyReport {
  SurveyConfig config;
  SurveyStats stats;
  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};
Json to_json(const SurveyReport& r);
SurveyReport survey_report_from_json(const Json& j);

struct ExpectationReport {
  mpq_class success_prob;
  mpq_class value;
  friend bool operator==(const ExpectationReport&, const ExpectationReport&) = default;
};
ExpectationReport expectation_report(const mpq_class& success_prob);
Json to_json(const ExpectationReport& r);
ExpectationReport expectation_report_from_json(const Json& j);
/// "a/b" or "a" with 0 <= value <= 1.
mpq_class parse_probability(const std::string& s);

}  // namespace trigonal

#endif  // TRIGONAL_REPORT_HPP_

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

// Monte Carlo survey over random genus-3 hyperelliptic curves: how often a
// rational tractable subgroup, a rational trigonal map and a rational
// isogeny exist.

#ifndef TRIGONAL_SURVEY_HPP_
#define TRIGONAL_SURVEY_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "trigonal/hyperelliptic.hpp"
#include "trigonal/tractable.hpp"

namespace trigonal {

/// Uniform squarefree binary form of degree 8 (rejection sampling).
HCurve random_curve(const Field& fp, Rng& rng, long* rejections = nullptr);

/// Largest prime below 2^bits.
mpz_class prime_with_bits(int bits);

enum class SurveyDepth { kSubgroups, kTrigonal, kFull };
SurveyDepth parse_depth(const std::string& s);
std::string to_string(SurveyDepth d);

struct SurveyConfig {
  mpz_class p;
  long samples = 1;
  std::uint64_t seed = 0;
  SurveyDepth depth = SurveyDepth::kFull;
  friend bool operator==(const SurveyConfig&, const SurveyConfig&) = default;
};

struct SubgroupRecord {
  bool discriminant_square = false;
  bool trigonal_rational = false;  // a map was produced
  bool degenerate = false;         // square discriminant, no map
  bool alpha_square = false;
  friend bool operator==(const SubgroupRecord&, const SubgroupRecord&) = default;
};

/// Rationality flags of one subgroup of h, computed up to the given depth.
SubgroupRecord analyze_subgroup(const TractableSubgroup& s, const HCurve& h, SurveyDepth depth);

struct CurveRecord {
  long trial = 0;
  std::vector<mpz_class> coeffs;  // a0..a8
  std::vector<int> pattern;
  std::vector<SubgroupRecord> subgroups;
  int num_trig_rational() const;
  int num_isog_rational() const;
  bool success() const { return num_isog_rational() > 0; }
};

/// Trial seed from the master seed and the trial index.
std::uint64_t trial_seed(std::uint64_t master, long trial);
CurveRecord run_trial(const Field& fp, long trial, std::uint64_t master, SurveyDepth depth);

struct Fraction {
  mpz_class num, den;
  double value() const;
  /// Binomial standard error sqrt(f (1 - f) / den).
  double sigma() const;
  std::string decimal(int digits = 4) const;
};

struct SurveyStats {
  long curves = 0;
  long curves_with_subgroup = 0;
  long subgroups = 0;
  long trigonal_rational = 0;
  long degenerate = 0;
  long isogeny_rational = 0;
  long curves_with_success = 0;
  std::map<std::string, long> patterns;
  /// For #S in {3, 5, 7}: curve counts by number of rational isogenies.
  std::map<int, std::vector<long>> contingency;

  void add(const CurveRecord& r);
  void merge(const SurveyStats& o);
  Fraction subgroup_fraction() const { return {curves_with_subgroup, curves}; }
  Fraction trigonal_fraction() const { return {trigonal_rational, subgroups}; }
  Fraction isogeny_fraction() const { return {isogeny_rational, trigonal_rational}; }
  Fraction success_fraction() const { return {curves_with_success, curves}; }
  friend bool operator==(const SurveyStats& a, const SurveyStats& b);
};

/// Runs the trials over worker_count() threads. Rows are delivered to the
/// callback in trial order.
SurveyStats run_survey(const SurveyConfig& cfg,
                       const std::function<void(const CurveRecord&)>& row = nullptr);

constexpr const char* kCsvHeader = "trial,pattern,num_tractable,num_trig_rational,num_isog_rational,success";
std::string csv_row(const CurveRecord& r);

}  // namespace trigonal

#endif  // TRIGONAL_SURVEY_HPP_

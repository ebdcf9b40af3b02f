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

#include "trigonal/survey.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "trigonal/construction.hpp"
#include "trigonal/error.hpp"
#include "trigonal/tractable.hpp"
#include "trigonal/trigonal.hpp"

namespace trigonal {

HCurve random_curve(const Field& fp, Rng& rng, long* rejections) {
  for (;;) {
    std::vector<Fe> c;
    for (int i = 0; i <= 8; ++i) c.push_back(fp.random(rng));
    const Poly f(fp, std::move(c));
    if (f.degree() < 7 || !is_squarefree(f)) {
      if (rejections) ++*rejections;
      continue;
    }
    return HCurve(f);
  }
}

mpz_class prime_with_bits(int bits) {
  if (bits < 3 || bits > 4096) throw Error(ErrorCode::kParseError, "prime bit size out of range");
  mpz_class n = (mpz_class(1) << bits) - 1;
  while (!is_probable_prime(n)) n -= 2;
  return n;
}

SurveyDepth parse_depth(const std::string& s) {
  if (s == "subgroups") return SurveyDepth::kSubgroups;
  if (s == "trigonal") return SurveyDepth::kTrigonal;
  if (s == "full") return SurveyDepth::kFull;
  throw Error(ErrorCode::kParseError, "depth must be subgroups, trigonal or full");
}

std::string to_string(SurveyDepth d) {
  switch (d) {
    case SurveyDepth::kSubgroups: return "subgroups";
    case SurveyDepth::kTrigonal: return "trigonal";
    case SurveyDepth::kFull: return "full";
  }
  return "full";
}

int CurveRecord::num_trig_rational() const {
  int n = 0;
  for (const auto& s : subgroups) n += s.trigonal_rational;
  return n;
}

int CurveRecord::num_isog_rational() const {
  int n = 0;
  for (const auto& s : subgroups) n += s.trigonal_rational && s.alpha_square;
  return n;
}

std::uint64_t trial_seed(std::uint64_t master, long trial) {
  // splitmix64 of the pair
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

SubgroupRecord analyze_subgroup(const TractableSubgroup& s, const HCurve& h, SurveyDepth depth) {
  SubgroupRecord sr;
  if (depth == SurveyDepth::kSubgroups) return sr;
  try {
    const TrigonalResult tr = trigonal_map_for(s, h);
    sr.discriminant_square = true;
    sr.trigonal_rational = true;
    if (depth == SurveyDepth::kFull)
      sr.alpha_square = isogeny_is_rational(build_fibration(tr.map, tr.curve));
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNotRational: break;
      case ErrorCode::kDegenerate:
      case ErrorCode::kDegenerateConfiguration:
        sr.degenerate = true;
        try {
          const MMatrix m = build_M(s);
          sr.discriminant_square = is_square(rationality_discriminant(m.alpha, m.beta));
        } catch (const Error&) {
        }
        break;
      default: throw;
    }
  }
  return sr;
}

CurveRecord run_trial(const Field& fp, long trial, std::uint64_t master, SurveyDepth depth) {
  Rng rng(trial_seed(master, trial));
  const HCurve h = random_curve(fp, rng);
  CurveRecord rec;
  rec.trial = trial;
  for (int i = 0; i <= 8; ++i) rec.coeffs.push_back(h.f().coeff(i).coeff(0));
  rec.pattern = factor_pattern(h);
  for (const auto& s : enumerate_tractable(h)) rec.subgroups.push_back(analyze_subgroup(s, h, depth));
  return rec;
}

double Fraction::value() const { return den == 0 ? 0.0 : mpq_class(num, den).get_d(); }

double Fraction::sigma() const {
  if (den == 0) return 0.0;
  const double f = value();
  return std::sqrt(f * (1 - f) / den.get_d());
}

std::string Fraction::decimal(int digits) const {
  if (den == 0) return "nan";
  ExpectationResult r{mpq_class(num, den)};
  r.value.canonicalize();
  return r.decimal(digits);
}

void SurveyStats::add(const CurveRecord& r) {
  ++curves;
  const long n = static_cast<long>(r.subgroups.size());
  if (n > 0) ++curves_with_subgroup;
  subgroups += n;
  trigonal_rational += r.num_trig_rational();
  for (const auto& s : r.subgroups) degenerate += s.degenerate;
  isogeny_rational += r.num_isog_rational();
  if (r.success()) ++curves_with_success;
  ++patterns[pattern_string(r.pattern)];
  if (n == 3 || n == 5 || n == 7) {
    auto& row = contingency[static_cast<int>(n)];
    row.resize(static_cast<size_t>(n) + 1, 0);
    ++row[static_cast<size_t>(r.num_isog_rational())];
  }
}

void SurveyStats::merge(const SurveyStats& o) {
  curves += o.curves;
  curves_with_subgroup += o.curves_with_subgroup;
  subgroups += o.subgroups;
  trigonal_rational += o.trigonal_rational;
  degenerate += o.degenerate;
  isogeny_rational += o.isogeny_rational;
  curves_with_success += o.curves_with_success;
  for (const auto& [k, v] : o.patterns) patterns[k] += v;
  for (const auto& [k, v] : o.contingency) {
    auto& row = contingency[k];
    row.resize(std::max(row.size(), v.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) row[i] += v[i];
  }
}

bool operator==(const SurveyStats& a, const SurveyStats& b) {
  return a.curves == b.curves && a.curves_with_subgroup == b.curves_with_subgroup &&
         a.subgroups == b.subgroups && a.trigonal_rational == b.trigonal_rational &&
         a.degenerate == b.degenerate && a.isogeny_rational == b.isogeny_rational &&
         a.curves_with_success == b.curves_with_success && a.patterns == b.patterns &&
         a.contingency == b.contingency;
}

SurveyStats run_survey(const SurveyConfig& cfg, const std::function<void(const CurveRecord&)>& row) {
  if (cfg.samples < 1) throw Error(ErrorCode::kParseError, "sample count must be positive");
  const Field& fp = make_extension(cfg.p, 1);
  const long n = cfg.samples;
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(std::min<long>(n, 1 << 20))));
  std::atomic<long> next{0};
  std::mutex mu;
  std::map<long, CurveRecord> pending;
  long emitted = 0;
  SurveyStats stats;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (long i; (i = next.fetch_add(1)) < n;) {
        CurveRecord rec = run_trial(fp, i, cfg.seed, cfg.depth);
        std::lock_guard<std::mutex> lock(mu);
        if (error) return;
        pending.emplace(i, std::move(rec));
        while (!pending.empty() && pending.begin()->first == emitted) {
          stats.add(pending.begin()->second);
          if (row) row(pending.begin()->second);
          pending.erase(pending.begin());
          ++emitted;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      next = n;
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return stats;
}

std::string csv_row(const CurveRecord& r) {
  std::ostringstream os;
  os << r.trial << ',' << pattern_string(r.pattern) << ',' << r.subgroups.size() << ','
     << r.num_trig_rational() << ',' << r.num_isog_rational() << ',' << (r.success() ? 1 : 0);
  return os.str();
}

}  // namespace trigonal

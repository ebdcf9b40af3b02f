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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trigonal/error.hpp"
#include "trigonal/io.hpp"
#include "trigonal/report.hpp"
#include "trigonal/survey.hpp"
#include "trigonal/tractable.hpp"

namespace {

using namespace trigonal;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int report_error(const Json& err, int code) {
  std::cerr << err.dump() << "\n";
  return code;
}

HCurve load_curve(const std::string& path) { return curve_from_json(read_json_file(path)); }

int parse_sign(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw Error(ErrorCode::kParseError, "sign must be + or -");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational (2,2,2)-isogenies of genus-3 hyperelliptic curves via the trigonal construction"};
  app.require_subcommand(1);

  std::string curve_path, sign = "+", divisor_arg, csv_path, depth = "full", prob = "1/4";
  int subgroup = 0, trials = 5, ext = 1, bits = 0;
  bool no_verify = false;
  std::uint64_t seed = 0;
  long samples = 0;
  std::string prime;

  auto* analyze_cmd = app.add_subcommand("analyze", "Factor pattern, tractable subgroups and rationality flags");
  analyze_cmd->add_option("--curve", curve_path, "Curve JSON file")->required();

  auto* isogeny_cmd = app.add_subcommand("isogeny", "Full construction report for one subgroup");
  isogeny_cmd->add_option("--curve", curve_path, "Curve JSON file")->required();
  isogeny_cmd->add_option("--subgroup", subgroup, "Subgroup index from analyze");
  isogeny_cmd->add_option("--sign", sign, "+ for R, - for R'");
  isogeny_cmd->add_flag("--no-verify", no_verify, "Skip the verification summary");
  isogeny_cmd->add_option("--trials", trials, "Random classes and fibers checked")->check(CLI::NonNegativeNumber);
  isogeny_cmd->add_option("--ext", ext, "Largest extension degree for fiber checks")->check(CLI::Range(0, 6));
  isogeny_cmd->add_option("--seed", seed, "Seed for the verification samples");

  auto* map_cmd = app.add_subcommand("map", "Image of a divisor class on H as a divisor on X");
  map_cmd->add_option("--curve", curve_path, "Curve JSON file")->required();
  map_cmd->add_option("--divisor", divisor_arg, "Divisor JSON, inline or as a file")->required();
  map_cmd->add_option("--subgroup", subgroup, "Subgroup index from analyze");
  map_cmd->add_option("--sign", sign, "+ for R, - for R'");
  map_cmd->add_option("--seed", seed, "Seed for the auxiliary divisor");

  auto* verify_cmd = app.add_subcommand("verify", "Zeta of H, round-trip consensus and fiber checks");
  verify_cmd->add_option("--curve", curve_path, "Curve JSON file")->required();
  verify_cmd->add_option("--subgroup", subgroup, "Subgroup index from analyze");
  verify_cmd->add_option("--sign", sign, "+ for R, - for R'");
  verify_cmd->add_option("--trials", trials, "Random classes and fibers checked")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--ext", ext, "Largest extension degree for fiber checks")->check(CLI::Range(0, 6));
  verify_cmd->add_option("--seed", seed, "Seed for the random samples");

  auto* survey_cmd = app.add_subcommand("survey", "Monte Carlo survey of random curves");
  auto* prime_opt = survey_cmd->add_option("--prime", prime, "Prime p (decimal)");
  auto* bits_opt = survey_cmd->add_option("--prime-bits", bits, "Use the largest prime below 2^B")
                       ->check(CLI::Range(4, 512));
  prime_opt->excludes(bits_opt);
  survey_cmd->add_option("--samples", samples, "Number of curves")->required()->check(CLI::PositiveNumber);
  survey_cmd->add_option("--seed", seed, "Master seed")->required();
  survey_cmd->add_option("--depth", depth, "subgroups, trigonal or full");
  survey_cmd->add_option("--csv", csv_path, "Write one row per curve to this path");

  auto* exp_cmd = app.add_subcommand("expectation", "Expected success probability over random curves");
  exp_cmd->add_option("--success-prob", prob, "Per-subgroup success probability, e.g. 1/4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(error_json("ParseError", e.what()), 2);
  }

  try {
    VerifyOptions opt{trials, ext, seed};
    if (*analyze_cmd) {
      emit(to_json(analyze(load_curve(curve_path))));
    } else if (*isogeny_cmd) {
      const HCurve h = load_curve(curve_path);
      emit(to_json(isogeny_report(h, subgroup, parse_sign(sign), no_verify ? nullptr : &opt)));
    } else if (*map_cmd) {
      const HCurve h = load_curve(curve_path);
      const DivisorInput d = divisor_from_json(read_json_arg(divisor_arg), h.field());
      emit(to_json(map_report(h, d, subgroup, parse_sign(sign), seed)));
    } else if (*verify_cmd) {
      const VerifyReport r = verify_report(load_curve(curve_path), subgroup, parse_sign(sign), opt);
      emit(to_json(r));
      if (!r.summary.ok()) return report_error(error_json("VerificationFailed", "a verification check failed"), 1);
    } else if (*survey_cmd) {
      if (prime.empty() && bits == 0) throw Error(ErrorCode::kParseError, "one of --prime or --prime-bits is required");
      SurveyConfig cfg;
      cfg.p = prime.empty() ? prime_with_bits(bits) : parse_integer(prime);
      Field::prime(cfg.p);
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.depth = parse_depth(depth);
      std::ofstream csv;
      if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw Error(ErrorCode::kParseError, "cannot write " + csv_path);
        csv << kCsvHeader << "\n";
      }
      const SurveyStats stats = run_survey(cfg, [&](const CurveRecord& rec) {
        if (csv.is_open()) csv << csv_row(rec) << "\n";
      });
      emit(to_json(SurveyReport{cfg, stats}));
    } else if (*exp_cmd) {
      emit(to_json(expectation_report(parse_probability(prob))));
    }
  } catch (const Error& e) {
    return report_error(error_json(e), exit_code(e.code()));
  } catch (const std::exception& e) {
    return report_error(error_json("Internal", e.what()), 1);
  }
  return 0;
}

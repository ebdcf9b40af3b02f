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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "trigonal/error.hpp"
#include "trigonal/io.hpp"
#include "trigonal/report.hpp"
#include "trigonal/survey.hpp"

namespace py = pybind11;
using namespace trigonal;

namespace {

int sign_of(const std::string& s) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw Error(ErrorCode::kParseError, "sign must be + or -");
}

HCurve curve_arg(const std::string& curve_json) { return curve_from_json(read_json_arg(curve_json)); }

std::string analyze_json(const std::string& curve) { return to_json(analyze(curve_arg(curve))).dump(); }

std::string isogeny_json(const std::string& curve, int subgroup, const std::string& sign, bool verify, int trials,
                         int ext, std::uint64_t seed) {
  const VerifyOptions opt{trials, ext, seed};
  return to_json(isogeny_report(curve_arg(curve), subgroup, sign_of(sign), verify ? &opt : nullptr)).dump();
}

std::string verify_json(const std::string& curve, int subgroup, const std::string& sign, int trials, int ext,
                        std::uint64_t seed) {
  return to_json(verify_report(curve_arg(curve), subgroup, sign_of(sign), VerifyOptions{trials, ext, seed})).dump();
}

std::string map_json(const std::string& curve, const std::string& divisor, int subgroup, const std::string& sign,
                     std::uint64_t seed) {
  const HCurve h = curve_arg(curve);
  const DivisorInput d = divisor_from_json(read_json_arg(divisor), h.field());
  return to_json(map_report(h, d, subgroup, sign_of(sign), seed)).dump();
}

py::tuple survey_json(const std::string& p, long samples, std::uint64_t seed, const std::string& depth,
                      bool rows) {
  SurveyConfig cfg;
  cfg.p = parse_integer(p);
  Field::prime(cfg.p);
  cfg.samples = samples;
  cfg.seed = seed;
  cfg.depth = parse_depth(depth);
  std::vector<std::string> csv;
  SurveyStats stats;
  {
    py::gil_scoped_release release;
    stats = run_survey(cfg, [&](const CurveRecord& r) {
      if (rows) csv.push_back(csv_row(r));
    });
  }
  return py::make_tuple(to_json(SurveyReport{cfg, stats}).dump(), csv);
}

std::string expectation_json(const std::string& prob) {
  return to_json(expectation_report(parse_probability(prob))).dump();
}

// decode then encode again
std::string normalize_json(const std::string& kind, const std::string& text) {
  const Json j = read_json_arg(text);
  if (kind == "curve") return curve_to_json(curve_from_json(j)).dump();
  if (kind == "analyze") return to_json(analyze_report_from_json(j)).dump();
  if (kind == "isogeny") return to_json(isogeny_report_from_json(j)).dump();
  if (kind == "verify") return to_json(verify_report_from_json(j)).dump();
  if (kind == "map") return to_json(map_report_from_json(j)).dump();
  if (kind == "survey") return to_json(survey_report_from_json(j)).dump();
  if (kind == "expectation") return to_json(expectation_report_from_json(j)).dump();
  throw Error(ErrorCode::kParseError, "unknown report kind " + kind);
}

std::vector<std::string> l_polynomial_strings(const std::string& curve) {
  std::vector<std::string> out;
  for (const auto& c : l_polynomial(curve_arg(curve))) out.push_back(c.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of trigonal_isogeny; functions take and return JSON text.";
  static py::handle native_error = py::exception<Error>(m, "NativeError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const Json j = error_json(e);
      py::set_error(native_error, py::make_tuple(j["error"]["code"].get<std::string>(),
                                                 j["error"]["message"].get<std::string>(), exit_code(e.code())));
    }
  });
  m.def("analyze", &analyze_json, py::arg("curve"));
  m.def("isogeny", &isogeny_json, py::arg("curve"), py::arg("subgroup") = 0, py::arg("sign") = "+",
        py::arg("verify") = true, py::arg("trials") = 5, py::arg("ext") = 1, py::arg("seed") = 0);
  m.def("verify", &verify_json, py::arg("curve"), py::arg("subgroup") = 0, py::arg("sign") = "+",
        py::arg("trials") = 5, py::arg("ext") = 1, py::arg("seed") = 0);
  m.def("map_divisor", &map_json, py::arg("curve"), py::arg("divisor"), py::arg("subgroup") = 0,
        py::arg("sign") = "+", py::arg("seed") = 0);
  m.def("survey", &survey_json, py::arg("p"), py::arg("samples"), py::arg("seed"), py::arg("depth") = "full",
        py::arg("rows") = false);
  m.def("expectation", &expectation_json, py::arg("success_prob") = "1/4");
  m.def("normalize", &normalize_json, py::arg("kind"), py::arg("text"));
  m.def("l_polynomial", &l_polynomial_strings, py::arg("curve"));
  m.def("prime_with_bits", [](int bits) { return prime_with_bits(bits).get_str(); }, py::arg("bits"));
  m.attr("CSV_HEADER") = kCsvHeader;
}

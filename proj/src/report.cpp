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

#include "trigonal/report.hpp"

#include <algorithm>

#include "trigonal/error.hpp"

namespace trigonal {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

bool flag(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_boolean()) fail(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

long integer(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer()) fail(std::string(key) + " must be an integer");
  return v.get<long>();
}

const Json& array(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) fail(std::string(key) + " must be an array");
  return v;
}

std::string sign_string(int sign) { return sign > 0 ? "+" : "-"; }

int parse_sign(const Json& j) {
  const Json& v = member(j, "sign");
  if (v == "+") return 1;
  if (v == "-") return -1;
  fail("sign must be \"+\" or \"-\"");
}

Json strings(const std::vector<mpz_class>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::vector<mpz_class> integers(const Json& j, const char* key) {
  std::vector<mpz_class> out;
  for (const auto& x : array(j, key)) out.push_back(parse_integer(x));
  return out;
}

Json forms(const std::vector<BinaryForm>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(to_json(f));
  return a;
}

std::vector<BinaryForm> forms_from(const Json& j, const Field& fp) {
  std::vector<BinaryForm> out;
  for (const auto& f : j) out.push_back(form_from_json(f, fp));
  return out;
}

std::string field_label(const std::vector<BinaryForm>& fs) {
  return fs.empty() ? std::string() : fs.front().field().label();
}

Json pattern_json(const std::vector<int>& pattern) { return pattern_string(pattern); }

std::vector<int> parse_pattern(const Json& j) {
  if (!j.is_string()) fail("pattern must be a string");
  std::vector<int> out;
  const std::string s = j.get<std::string>();
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t next = std::min(s.find('-', pos), s.size());
    const mpz_class v = parse_integer(s.substr(pos, next - pos));
    if (v < 1 || v > 8) fail("bad pattern \"" + s + "\"");
    out.push_back(static_cast<int>(v.get_si()));
    pos = next + 1;
  }
  return out;
}

Json flags_json(const SubgroupRecord& f) {
  return Json{{"discriminant_square", f.discriminant_square},
              {"trigonal_rational", f.trigonal_rational},
              {"degenerate", f.degenerate},
              {"isogeny_rational", f.alpha_square}};
}

SubgroupRecord flags_from(const Json& j) {
  return {flag(j, "discriminant_square"), flag(j, "trigonal_rational"), flag(j, "degenerate"),
          flag(j, "isogeny_rational")};
}

Json rat(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const Json& j) {
  if (!j.is_string()) fail("rationals are encoded as strings");
  const std::string s = j.get<std::string>();
  const size_t slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  const mpz_class den = parse_integer(s.substr(slash + 1));
  if (den <= 0) fail("bad denominator in \"" + s + "\"");
  mpq_class q(parse_integer(s.substr(0, slash)), den);
  q.canonicalize();
  return q;
}

Json fraction_json(const Fraction& f) {
  return Json{{"num", f.num.get_str()}, {"den", f.den.get_str()}, {"decimal", f.decimal(4)}};
}

}  // namespace

TractableSubgroup select_subgroup(const HCurve& h, int index) {
  auto subs = enumerate_tractable(h);
  if (subs.empty()) throw Error(ErrorCode::kNoTractableSubgroup, "the curve has no rational tractable subgroup");
  if (index < 0 || index >= static_cast<int>(subs.size()))
    fail("subgroup index " + std::to_string(index) + " outside [0, " + std::to_string(subs.size()) + ")");
  return subs[static_cast<size_t>(index)];
}

// analyze

AnalyzeReport analyze(const HCurve& h) {
  AnalyzeReport r{h, factor_pattern(h), {}};
  for (const auto& s : enumerate_tractable(h))
    r.subgroups.push_back({s.factors, analyze_subgroup(s, h, SurveyDepth::kFull)});
  return r;
}

Json to_json(const AnalyzeReport& r) {
  Json subs = Json::array();
  for (size_t i = 0; i < r.subgroups.size(); ++i) {
    const auto& s = r.subgroups[i];
    Json e{{"index", i}, {"field", field_label(s.factors)}, {"factors", forms(s.factors)}};
    const Json flags = flags_json(s.flags);
    for (const auto& [k, v] : flags.items()) e[k] = v;
    subs.push_back(e);
  }
  return Json{{"curve", curve_to_json(r.curve)},
              {"pattern", pattern_json(r.pattern)},
              {"num_tractable", r.subgroups.size()},
              {"subgroups", subs}};
}

AnalyzeReport analyze_report_from_json(const Json& j) {
  AnalyzeReport r;
  r.curve = curve_from_json(member(j, "curve"));
  const Field& fp = r.curve.field();
  r.pattern = parse_pattern(member(j, "pattern"));
  for (const auto& s : array(j, "subgroups"))
    r.subgroups.push_back({forms_from(array(s, "factors"), fp), flags_from(s)});
  if (integer(j, "num_tractable") != static_cast<long>(r.subgroups.size())) fail("num_tractable mismatch");
  return r;
}

// verification

std::string RoundTripSummary::consensus() const {
  if (mismatch > 0 || (plus2 > 0 && minus2 > 0)) return "inconsistent";
  if (plus2 > 0) return "+2";
  if (minus2 > 0) return "-2";
  return "undetermined";
}

void RoundTripSummary::add(RoundTrip r) {
  switch (r) {
    case RoundTrip::kPlus2: ++plus2; break;
    case RoundTrip::kMinus2: ++minus2; break;
    case RoundTrip::kBoth: ++both; break;
    case RoundTrip::kMismatch: ++mismatch; break;
  }
}

bool VerificationSummary::ok() const {
  if (roundtrip && roundtrip->consensus() == "inconsistent") return false;
  return std::all_of(fibers.begin(), fibers.end(), [](const FiberCheck& f) { return f.agree(); });
}

VerificationSummary verify_construction(const HCurve& h, const TrigonalResult& tr, int sign,
                                        const VerifyOptions& opt) {
  VerificationSummary out;
  const Field& fp = h.field();
  const mpz_class& p = fp.characteristic();
  if (p * p * p <= kZetaLimit) {
    ZetaSummary z;
    for (int k = 1; k <= 3; ++k) z.counts.push_back(count_points(h, k));
    z.l_polynomial = l_polynomial_from_counts(p, z.counts[0], z.counts[1], z.counts[2]);
    out.zeta = z;
  } else {
    out.skipped.push_back("zeta: p^3 exceeds " + std::to_string(kZetaLimit));
  }
  Rng rng(opt.seed);
  const Correspondence c = construct(tr, sign);
  if (!c.plane.rational) {
    out.skipped.push_back("roundtrip: the isogeny is not defined over F_p");
  } else {
    try {
      const Isogeny iso = make_isogeny(h, tr, sign);
      RoundTripSummary rt;
      for (int i = 0; i < opt.trials; ++i)
        rt.add(roundtrip(iso, random_class(iso.odd.odd, rng), rng()));
      out.roundtrip = rt;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoRationalWeierstrassPoint) throw;
      out.skipped.push_back("roundtrip: no F_p-rational Weierstrass point");
    }
  }
  for (int k = 1; k <= opt.ext; ++k) {
    int done = 0;
    for (int attempt = 0; attempt < 64 * opt.trials && done < opt.trials; ++attempt) {
      const Fe t0 = fp.random(rng);
      if (!c.fib.unramified(t0)) continue;
      out.fibers.push_back({t0, k, static_cast<int>(fiber_points(c, t0, k).size()),
                            fiber_pair_partition_count(c.fib, t0, k)});
      ++done;
    }
  }
  return out;
}

namespace {

Json to_json(const VerificationSummary& v) {
  Json out = Json::object();
  if (v.zeta) {
    out["zeta"] = Json{{"counts", strings(v.zeta->counts)}, {"l_polynomial", strings(v.zeta->l_polynomial)}};
  } else {
    out["zeta"] = nullptr;
  }
  if (v.roundtrip) {
    const auto& r = *v.roundtrip;
    out["roundtrip"] = Json{{"plus2", r.plus2}, {"minus2", r.minus2}, {"both", r.both},
                            {"mismatch", r.mismatch}, {"consensus", r.consensus()}};
  } else {
    out["roundtrip"] = nullptr;
  }
  Json fibers = Json::array();
  for (const auto& f : v.fibers)
    fibers.push_back(Json{{"t0", trigonal::to_json(f.t0)}, {"k", f.k}, {"points", f.points},
                          {"oracle", f.oracle}, {"agree", f.agree()}});
  out["fibers"] = fibers;
  out["skipped"] = v.skipped;
  out["ok"] = v.ok();
  return out;
}

VerificationSummary verification_from(const Json& j, const Field& fp) {
  VerificationSummary v;
  const Json& z = member(j, "zeta");
  if (!z.is_null()) v.zeta = ZetaSummary{integers(z, "counts"), integers(z, "l_polynomial")};
  const Json& r = member(j, "roundtrip");
  if (!r.is_null()) {
    RoundTripSummary s;
    s.plus2 = static_cast<int>(integer(r, "plus2"));
    s.minus2 = static_cast<int>(integer(r, "minus2"));
    s.both = static_cast<int>(integer(r, "both"));
    s.mismatch = static_cast<int>(integer(r, "mismatch"));
    if (member(r, "consensus") != s.consensus()) fail("roundtrip consensus mismatch");
    v.roundtrip = s;
  }
  for (const auto& f : array(j, "fibers")) {
    FiberCheck c{fe_from_json(member(f, "t0"), fp), static_cast<int>(integer(f, "k")),
                 static_cast<int>(integer(f, "points")), static_cast<int>(integer(f, "oracle"))};
    if (flag(f, "agree") != c.agree()) fail("fiber check flag mismatch");
    v.fibers.push_back(c);
  }
  for (const auto& s : array(j, "skipped")) {
    if (!s.is_string()) fail("skipped entries must be strings");
    v.skipped.push_back(s.get<std::string>());
  }
  if (flag(j, "ok") != v.ok()) fail("verification flag mismatch");
  return v;
}

}  // namespace

// isogeny

IsogenyReport isogeny_report(const HCurve& h, int subgroup, int sign, const VerifyOptions* verify) {
  const TrigonalResult tr = trigonal_map_for(select_subgroup(h, subgroup), h);
  const Correspondence c = construct(tr, sign);
  IsogenyReport r;
  r.curve = h;
  r.subgroup = subgroup;
  r.sign = sign;
  r.factors = tr.subgroup.factors;
  r.map = tr.map;
  r.lambda = tr.lambda;
  r.chart = tr.chart;
  r.g0 = c.fib.g0;
  r.g1 = c.fib.g1;
  r.g2 = c.fib.g2;
  r.f0 = c.fib.f0;
  r.f1 = c.fib.f1;
  r.f2 = c.fib.f2;
  r.s = c.fib.s;
  r.r = c.fib.r;
  r.alpha = c.fib.alpha;
  r.delta0 = c.plane.delta0;
  r.delta2 = c.plane.delta2;
  r.delta4 = c.plane.delta4;
  r.delta1 = c.plane.delta1;
  r.x_model = c.x.c;
  r.isogeny_rational = c.plane.rational;
  if (verify) r.verification = verify_construction(h, tr, sign, *verify);
  return r;
}

Json to_json(const IsogenyReport& r) {
  Json x = Json::array();
  for (const auto& eq : r.x_model) {
    Json row = Json::array();
    for (const auto& p : eq) row.push_back(to_json(p));
    x.push_back(row);
  }
  return Json{
      {"curve", curve_to_json(r.curve)},
      {"subgroup", r.subgroup},
      {"sign", sign_string(r.sign)},
      {"field", field_label(r.factors)},
      {"factors", forms(r.factors)},
      {"trigonal_map",
       {{"n1", to_json(r.map.n1)}, {"n0", to_json(r.map.n0)}, {"d1", to_json(r.map.d1)},
        {"d0", to_json(r.map.d0)}, {"lambda", to_json(r.lambda)}, {"chart", to_json(r.chart)}}},
      {"fibration",
       {{"g0", to_json(r.g0)}, {"g1", to_json(r.g1)}, {"g2", to_json(r.g2)}, {"f0", to_json(r.f0)},
        {"f1", to_json(r.f1)}, {"f2", to_json(r.f2)}, {"s", to_json(r.s)}, {"alpha", to_json(r.alpha)},
        {"r", to_json(r.r)}}},
      {"plane_model",
       {{"delta0", to_json(r.delta0)}, {"delta2", to_json(r.delta2)}, {"delta4", to_json(r.delta4)},
        {"delta1", to_json(r.delta1)}}},
      {"x_model", x},
      {"isogeny_rational", r.isogeny_rational},
      {"verification", r.verification ? to_json(*r.verification) : Json(nullptr)}};
}

IsogenyReport isogeny_report_from_json(const Json& j) {
  IsogenyReport r;
  r.curve = curve_from_json(member(j, "curve"));
  const Field& fp = r.curve.field();
  r.subgroup = static_cast<int>(integer(j, "subgroup"));
  r.sign = parse_sign(j);
  r.factors = forms_from(array(j, "factors"), fp);
  if (member(j, "field") != field_label(r.factors)) fail("subgroup field label mismatch");
  const Json& m = member(j, "trigonal_map");
  r.map = {fe_from_json(member(m, "n1"), fp), fe_from_json(member(m, "n0"), fp),
           fe_from_json(member(m, "d1"), fp), fe_from_json(member(m, "d0"), fp)};
  r.lambda = fe_from_json(member(m, "lambda"), fp);
  r.chart = mobius_from_json(member(m, "chart"), fp);
  const Json& f = member(j, "fibration");
  r.g0 = poly_from_json(member(f, "g0"), fp);
  r.g1 = poly_from_json(member(f, "g1"), fp);
  r.g2 = poly_from_json(member(f, "g2"), fp);
  r.f0 = poly_from_json(member(f, "f0"), fp);
  r.f1 = poly_from_json(member(f, "f1"), fp);
  r.f2 = poly_from_json(member(f, "f2"), fp);
  r.s = poly_from_json(member(f, "s"), fp);
  r.alpha = fe_from_json(member(f, "alpha"), fp);
  r.r = poly_from_json(member(f, "r"), fp);
  const Json& d = member(j, "plane_model");
  r.delta0 = poly_from_json(member(d, "delta0"), fp);
  r.delta2 = poly_from_json(member(d, "delta2"), fp);
  r.delta4 = poly_from_json(member(d, "delta4"), fp);
  r.delta1 = poly_from_json(member(d, "delta1"), fp);
  const Json& x = array(j, "x_model");
  if (x.size() != 3) fail("x_model must have 3 equations");
  for (size_t i = 0; i < 3; ++i) {
    if (!x[i].is_array() || x[i].size() != 7) fail("each x_model equation has 7 coefficients");
    for (size_t k = 0; k < 7; ++k) r.x_model[i][k] = poly_from_json(x[i][k], fp);
  }
  r.isogeny_rational = flag(j, "isogeny_rational");
  const Json& v = member(j, "verification");
  if (!v.is_null()) r.verification = verification_from(v, fp);
  return r;
}

// verify

VerifyReport verify_report(const HCurve& h, int subgroup, int sign, const VerifyOptions& opt) {
  const TrigonalResult tr = trigonal_map_for(select_subgroup(h, subgroup), h);
  return {h, subgroup, sign, verify_construction(h, tr, sign, opt)};
}

Json to_json(const VerifyReport& r) {
  return Json{{"curve", curve_to_json(r.curve)},
              {"subgroup", r.subgroup},
              {"sign", sign_string(r.sign)},
              {"verification", to_json(r.summary)}};
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  r.curve = curve_from_json(member(j, "curve"));
  r.subgroup = static_cast<int>(integer(j, "subgroup"));
  r.sign = parse_sign(j);
  r.summary = verification_from(member(j, "verification"), r.curve.field());
  return r;
}

// map

MapReport map_report(const HCurve& h, const DivisorInput& d, int subgroup, int sign, std::uint64_t seed) {
  const TrigonalResult tr = trigonal_map_for(select_subgroup(h, subgroup), h);
  const Isogeny iso = make_isogeny(h, tr, sign);
  MapReport r{h, subgroup, sign, seed, d, divisor_class(iso.odd, d), {}};
  r.image = phi_on_class(iso, r.divisor_class, seed);
  return r;
}

Json to_json(const MapReport& r) {
  return Json{{"curve", curve_to_json(r.curve)},
              {"subgroup", r.subgroup},
              {"sign", sign_string(r.sign)},
              {"seed", std::to_string(r.seed)},
              {"divisor", to_json(r.divisor)},
              {"class", to_json(r.divisor_class)},
              {"image", to_json(r.image)}};
}

MapReport map_report_from_json(const Json& j) {
  MapReport r;
  r.curve = curve_from_json(member(j, "curve"));
  const Field& fp = r.curve.field();
  r.subgroup = static_cast<int>(integer(j, "subgroup"));
  r.sign = parse_sign(j);
  const mpz_class seed = parse_integer(member(j, "seed"));
  if (seed < 0 || mpz_sizeinbase(seed.get_mpz_t(), 2) > 64) fail("seed must fit in 64 bits");
  r.seed = std::stoull(seed.get_str());
  r.divisor = divisor_from_json(member(j, "divisor"), fp);
  r.divisor_class = mumford_from_json(member(j, "class"), fp);
  r.image = xdivisor_from_json(member(j, "image"), fp);
  return r;
}

// survey

Json to_json(const SurveyReport& r) {
  const SurveyStats& s = r.stats;
  Json patterns = Json::object();
  for (const auto& [k, v] : s.patterns) patterns[k] = v;
  Json contingency = Json::object();
  for (const auto& [k, v] : s.contingency) contingency[std::to_string(k)] = v;
  return Json{{"p", r.config.p.get_str()},
              {"samples", r.config.samples},
              {"seed", std::to_string(r.config.seed)},
              {"depth", to_string(r.config.depth)},
              {"curves", s.curves},
              {"curves_with_subgroup", s.curves_with_subgroup},
              {"subgroups", s.subgroups},
              {"trigonal_rational", s.trigonal_rational},
              {"degenerate", s.degenerate},
              {"isogeny_rational", s.isogeny_rational},
              {"curves_with_success", s.curves_with_success},
              {"fractions",
               {{"subgroup", fraction_json(s.subgroup_fraction())},
                {"trigonal", fraction_json(s.trigonal_fraction())},
                {"isogeny", fraction_json(s.isogeny_fraction())},
                {"success", fraction_json(s.success_fraction())}}},
              {"patterns", patterns},
              {"contingency", contingency}};
}

SurveyReport survey_report_from_json(const Json& j) {
  SurveyReport r;
  r.config.p = parse_integer(member(j, "p"));
  r.config.samples = integer(j, "samples");
  const mpz_class seed = parse_integer(member(j, "seed"));
  if (seed < 0 || mpz_sizeinbase(seed.get_mpz_t(), 2) > 64) fail("seed must fit in 64 bits");
  r.config.seed = std::stoull(seed.get_str());
  const Json& depth = member(j, "depth");
  if (!depth.is_string()) fail("depth must be a string");
  r.config.depth = parse_depth(depth.get<std::string>());
  SurveyStats& s = r.stats;
  s.curves = integer(j, "curves");
  s.curves_with_subgroup = integer(j, "curves_with_subgroup");
  s.subgroups = integer(j, "subgroups");
  s.trigonal_rational = integer(j, "trigonal_rational");
  s.degenerate = integer(j, "degenerate");
  s.isogeny_rational = integer(j, "isogeny_rational");
  s.curves_with_success = integer(j, "curves_with_success");
  const Json& patterns = member(j, "patterns");
  if (!patterns.is_object()) fail("patterns must be an object");
  for (const auto& [k, v] : patterns.items()) {
    parse_pattern(Json(k));
    if (!v.is_number_integer()) fail("pattern counts must be integers");
    s.patterns[k] = v.get<long>();
  }
  const Json& contingency = member(j, "contingency");
  if (!contingency.is_object()) fail("contingency must be an object");
  for (const auto& [k, v] : contingency.items()) {
    const mpz_class key = parse_integer(k);
    if (!v.is_array()) fail("contingency rows must be arrays");
    std::vector<long> row;
    for (const auto& x : v) {
      if (!x.is_number_integer()) fail("contingency counts must be integers");
      row.push_back(x.get<long>());
    }
    s.contingency[static_cast<int>(key.get_si())] = row;
  }
  if (to_json(r)["fractions"] != member(j, "fractions")) fail("fractions do not match the counts");
  return r;
}

// expectation

mpq_class parse_probability(const std::string& s) {
  const mpq_class q = parse_rational(Json(s));
  if (q < 0 || q > 1) fail("probability must lie in [0, 1]");
  return q;
}

ExpectationReport expectation_report(const mpq_class& success_prob) {
  return {success_prob, expectation(success_prob).value};
}

Json to_json(const ExpectationReport& r) {
  return Json{{"success_prob", rat(r.success_prob)},
              {"value", rat(r.value)},
              {"decimal", ExpectationResult{r.value}.decimal(4)}};
}

ExpectationReport expectation_report_from_json(const Json& j) {
  ExpectationReport r{parse_rational(member(j, "success_prob")), parse_rational(member(j, "value"))};
  if (member(j, "decimal") != ExpectationResult{r.value}.decimal(4)) fail("decimal rendering mismatch");
  return r;
}

}  // namespace trigonal

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

#include "trigonal/io.hpp"

#include <fstream>
#include <sstream>

#include "trigonal/embedding.hpp"
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

const Json& array_of(const Json& j, const char* what, size_t n = 0) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  if (n != 0 && j.size() != n)
    fail(std::string(what) + " must have " + std::to_string(n) + " entries");
  return j;
}

int small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

mpz_class residue(const Json& j, const Field& fp) {
  const mpz_class v = parse_integer(j);
  if (v < 0 || v >= fp.characteristic())
    fail("field element " + v.get_str() + " is outside [0, " + fp.characteristic().get_str() + ")");
  return v;
}

Json coords(const Fe& a) {
  Json c = Json::array();
  for (const auto& x : a.coeffs()) c.push_back(x.get_str());
  return c;
}

std::vector<mpz_class> coords_from(const Json& j, const Field& fp, int k) {
  array_of(j, "coordinates", static_cast<size_t>(k));
  std::vector<mpz_class> c;
  for (const auto& x : j) c.push_back(residue(x, fp));
  return c;
}

const Field& tagged_field(const Json& j, const Field& fp) {
  const Field& f = parse_prime(member(j, "p"));
  if (&f != &fp) fail("element of characteristic " + f.characteristic().get_str() + " in a report over " + fp.label());
  const int k = small_int(member(j, "k"), "k");
  if (k < 2 || k > 64) fail("extension degree must lie in [2, 64]");
  return make_extension(fp.characteristic(), k);
}

}  // namespace

mpz_class parse_integer(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) fail("empty integer");
  for (size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') fail("not a decimal integer: \"" + s + "\"");
  return mpz_class(s, 10);
}

mpz_class parse_integer(const Json& j) {
  if (!j.is_string()) fail("integers are encoded as decimal strings, got " + j.dump());
  return parse_integer(j.get<std::string>());
}

const Field& parse_prime(const Json& j) { return Field::prime(parse_integer(j)); }

Json to_json(const Fe& a) {
  if (a.field().is_prime()) return a.coeff(0).get_str();
  return Json{{"p", a.field().characteristic().get_str()}, {"k", a.field().degree()}, {"c", coords(a)}};
}

Fe fe_from_json(const Json& j, const Field& fp) {
  if (j.is_string()) return fp.element(residue(j, fp));
  const Field& f = tagged_field(j, fp);
  return f.from_coeffs(coords_from(member(j, "c"), fp, f.degree()));
}

Json to_json(const Poly& f) {
  Json c = Json::array();
  const bool prime = f.field().is_prime();
  for (const auto& a : f.coeffs()) c.push_back(prime ? Json(a.coeff(0).get_str()) : coords(a));
  if (prime) return c;
  return Json{{"p", f.field().characteristic().get_str()}, {"k", f.field().degree()}, {"c", c}};
}

Poly poly_from_json(const Json& j, const Field& fp) {
  if (j.is_array()) {
    std::vector<Fe> c;
    for (const auto& x : j) c.push_back(fp.element(residue(x, fp)));
    Poly out(fp, c);
    if (out.degree() + 1 != static_cast<int>(c.size())) fail("polynomial has trailing zero coefficients");
    return out;
  }
  const Field& f = tagged_field(j, fp);
  std::vector<Fe> c;
  for (const auto& x : array_of(member(j, "c"), "coefficients"))
    c.push_back(f.from_coeffs(coords_from(x, fp, f.degree())));
  Poly out(f, c);
  if (out.degree() + 1 != static_cast<int>(c.size())) fail("polynomial has trailing zero coefficients");
  return out;
}

Json to_json(const BinaryForm& f) { return Json{{"degree", f.degree}, {"affine", to_json(f.affine)}}; }

BinaryForm form_from_json(const Json& j, const Field& fp) {
  BinaryForm f{poly_from_json(member(j, "affine"), fp), small_int(member(j, "degree"), "degree")};
  if (f.degree < f.affine.degree()) fail("form degree below its affine degree");
  return f;
}

Json to_json(const Mobius& m) { return Json::array({to_json(m.a), to_json(m.b), to_json(m.c), to_json(m.d)}); }

Mobius mobius_from_json(const Json& j, const Field& fp) {
  array_of(j, "chart", 4);
  Mobius m{fe_from_json(j[0], fp), fe_from_json(j[1], fp), fe_from_json(j[2], fp), fe_from_json(j[3], fp)};
  if (&m.a.field() != &m.b.field() || &m.a.field() != &m.c.field() || &m.a.field() != &m.d.field())
    fail("chart entries live in different fields");
  if (m.det().is_zero()) fail("singular chart");
  return m;
}

Json to_json(const Mumford& d) { return Json{{"a", to_json(d.a)}, {"b", to_json(d.b)}}; }

Mumford mumford_from_json(const Json& j, const Field& fp) {
  Mumford d{poly_from_json(member(j, "a"), fp), poly_from_json(member(j, "b"), fp)};
  if (!d.a.is_monic() || (!d.b.is_zero() && &d.a.field() != &d.b.field()) || d.b.degree() >= d.a.degree())
    fail("not a Mumford pair");
  return d;
}

Json curve_to_json(const HCurve& h) {
  Json f = Json::array();
  for (int i = 0; i <= 8; ++i) f.push_back(h.f().coeff(i).coeff(0).get_str());
  return Json{{"p", h.field().characteristic().get_str()}, {"f", f}};
}

HCurve curve_from_json(const Json& j) {
  const Field& fp = parse_prime(member(j, "p"));
  const Json& f = array_of(member(j, "f"), "f", 9);
  std::vector<Fe> c;
  for (const auto& x : f) c.push_back(fp.element(residue(x, fp)));
  return HCurve(Poly(fp, c));
}

bool operator==(const DivisorInput& a, const DivisorInput& b) {
  auto same = [](const std::vector<Point>& x, const std::vector<Point>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i].x != y[i].x || x[i].y != y[i].y) return false;
    return true;
  };
  return same(a.plus, b.plus) && same(a.minus, b.minus);
}

Json to_json(const DivisorInput& d) {
  auto pts = [](const std::vector<Point>& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(Json::array({to_json(p.x), to_json(p.y)}));
    return a;
  };
  return Json{{"points_plus", pts(d.plus)}, {"points_minus", pts(d.minus)}};
}

DivisorInput divisor_from_json(const Json& j, const Field& fp) {
  auto pts = [&](const char* key) {
    std::vector<Point> out;
    for (const auto& p : array_of(member(j, key), key)) {
      array_of(p, "point", 2);
      out.push_back({fe_from_json(p[0], fp), fe_from_json(p[1], fp)});
      if (!out.back().x.field().is_prime() || !out.back().y.field().is_prime())
        fail("divisor points must be F_p-rational");
    }
    return out;
  };
  DivisorInput d{pts("points_plus"), pts("points_minus")};
  if (d.plus.size() != d.minus.size()) fail("points_plus and points_minus must have equal length");
  return d;
}

DivisorClass divisor_class(const OddModel& model, const DivisorInput& d) {
  const HCurve& odd = model.odd;
  auto sum = [&](const std::vector<Point>& pts) {
    Mumford acc = identity(odd);
    for (const auto& p : pts) {
      if (&p.x.field() != &model.original.field() || !model.original.contains(p))
        fail("point (" + p.x.to_string() + ", " + p.y.to_string() + ") is not on the curve");
      const auto q = pull_point(p, model.chart);
      if (q) acc = cantor_add(odd, acc, point_class(*q));
    }
    return acc;
  };
  return cantor_add(odd, sum(d.plus), negate(sum(d.minus)));
}

Json to_json(const XPoint& q) {
  Json b = Json::array();
  for (const auto& x : q.b) b.push_back(to_json(x));
  return Json{{"t", to_json(q.t)}, {"b", b}};
}

XPoint xpoint_from_json(const Json& j, const Field& fp) {
  XPoint q;
  q.t = fe_from_json(member(j, "t"), fp);
  const Json& b = array_of(member(j, "b"), "b", 6);
  for (size_t i = 0; i < 6; ++i) {
    q.b[i] = fe_from_json(b[i], fp);
    if (&q.b[i].field() != &q.t.field()) fail("X-point coordinates live in different fields");
  }
  return q;
}

Json to_json(const XDivisor& d) {
  Json terms = Json::array();
  for (const auto& [q, w] : d.terms)
    terms.push_back(Json{{"point", to_json(q)}, {"orbit_size", orbit_size(q)}, {"weight", w}});
  return Json{{"degree", d.degree()}, {"terms", terms}};
}

XDivisor xdivisor_from_json(const Json& j, const Field& fp) {
  XDivisor d;
  for (const auto& t : array_of(member(j, "terms"), "terms")) {
    const XPoint q = xpoint_from_json(member(t, "point"), fp);
    if (!(canonical_orbit_rep(q) == q)) fail("X-divisor term is not a canonical orbit representative");
    const Json& w = member(t, "weight");
    if (!w.is_number_integer() || w.get<long>() == 0) fail("weight must be a nonzero integer");
    d.add(q, w.get<long>());
  }
  if (d.degree() != small_int(member(j, "degree"), "degree")) fail("X-divisor degree mismatch");
  return d;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kNonPrime:
    case ErrorCode::kPrimeTooSmall:
    case ErrorCode::kInvalidCurve:
      return 2;
    default:
      return 1;
  }
}

Json error_json(std::string_view code, const std::string& message) {
  return Json{{"error", {{"code", std::string(code)}, {"message", message}}}};
}

Json error_json(const Error& e) {
  std::string msg = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
  return error_json(to_string(e.code()), msg);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

Json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      fail(e.what());
    }
  }
  return read_json_file(arg);
}

}  // namespace trigonal

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

// JSON encodings. Field elements are decimal strings when they lie in a prime
// field and {"p", "k", "c"} objects (ascending coordinates) otherwise; the
// modulus of F_{p^k} is recomputed on parse. Every parser throws ParseError.

#ifndef TRIGONAL_IO_HPP_
#define TRIGONAL_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "trigonal/error.hpp"
#include "trigonal/hyperelliptic.hpp"
#include "trigonal/isogeny.hpp"

namespace trigonal {

using Json = nlohmann::ordered_json;

/// Strict decimal integer (optional leading minus, no spaces).
mpz_class parse_integer(const std::string& s);
mpz_class parse_integer(const Json& j);
const Field& parse_prime(const Json& j);

Json to_json(const Fe& a);
Fe fe_from_json(const Json& j, const Field& fp);

/// Plain array of coefficient strings over F_p; a tagged object with
/// coordinate arrays over extensions.
Json to_json(const Poly& f);
Poly poly_from_json(const Json& j, const Field& fp);

Json to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j, const Field& fp);

Json to_json(const Mobius& m);
Mobius mobius_from_json(const Json& j, const Field& fp);

Json to_json(const Mumford& d);
Mumford mumford_from_json(const Json& j, const Field& fp);

/// {"p": "...", "f": ["a0", ..., "a8"]}
Json curve_to_json(const HCurve& h);
HCurve curve_from_json(const Json& j);

/// sum (P) - sum (Q) with affine F_p-points of H.
struct DivisorInput {
  std::vector<Point> plus, minus;
  friend bool operator==(const DivisorInput& a, const DivisorInput& b);
};
Json to_json(const DivisorInput& d);
DivisorInput divisor_from_json(const Json& j, const Field& fp);
/// The class on the odd model; points must lie on model.original.
DivisorClass divisor_class(const OddModel& model, const DivisorInput& d);

Json to_json(const XPoint& q);
XPoint xpoint_from_json(const Json& j, const Field& fp);
Json to_json(const XDivisor& d);
XDivisor xdivisor_from_json(const Json& j, const Field& fp);

/// 2 for malformed or invalid input, 1 for mathematical failures.
int exit_code(ErrorCode code);
/// {"error": {"code": "...", "message": "..."}}
Json error_json(std::string_view code, const std::string& message);
Json error_json(const Error& e);

Json read_json_file(const std::string& path);
/// Accepts either a path to a file or an inline JSON document.
Json read_json_arg(const std::string& arg);

}  // namespace trigonal

#endif  // TRIGONAL_IO_HPP_

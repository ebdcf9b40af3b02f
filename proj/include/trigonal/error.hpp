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

#ifndef TRIGONAL_ERROR_HPP_
#define TRIGONAL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigonal {

enum class ErrorCode {
  kNonPrime,
  kPrimeTooSmall,
  kBadDegree,
  kContextMismatch,
  kZeroPolynomial,
  kNotMonicCubic,
  kInvalidCurve,
  kNoRationalWeierstrassPoint,
  kModelMismatch,
  kTooLarge,
  kNotAFactor,
  kNotAPartitionOf8,
  kDegeneratePair,
  kDegenerateConfiguration,
  kNotRational,
  kDegenerate,
  kDoubleLambdaDegenerate,
  kSquareRootObstruction,
  kRamifiedFiber,
  kBadSupport,
  kNoTractableSubgroup,
  kParseError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; code() is the
// machine-readable part that the CLI forwards on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trigonal

#endif  // TRIGONAL_ERROR_HPP_

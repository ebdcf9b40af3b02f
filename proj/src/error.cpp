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

#include "trigonal/error.hpp"

namespace trigonal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kPrimeTooSmall: return "PrimeTooSmall";
    case ErrorCode::kBadDegree: return "BadDegree";
    case ErrorCode::kContextMismatch: return "ContextMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotMonicCubic: return "NotMonicCubic";
    case ErrorCode::kInvalidCurve: return "InvalidCurve";
    case ErrorCode::kNoRationalWeierstrassPoint: return "NoRationalWeierstrassPoint";
    case ErrorCode::kModelMismatch: return "ModelMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotAFactor: return "NotAFactor";
    case ErrorCode::kNotAPartitionOf8: return "NotAPartitionOf8";
    case ErrorCode::kDegeneratePair: return "DegeneratePair";
    case ErrorCode::kDegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::kNotRational: return "NotRational";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kDoubleLambdaDegenerate: return "DoubleLambdaDegenerate";
    case ErrorCode::kSquareRootObstruction: return "SquareRootObstruction";
    case ErrorCode::kRamifiedFiber: return "RamifiedFiber";
    case ErrorCode::kBadSupport: return "BadSupport";
    case ErrorCode::kNoTractableSubgroup: return "NoTractableSubgroup";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace trigonal

// Copyright 2026 The padelimit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PADELIMIT_ERROR_HPP_
#define PADELIMIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace padelimit {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto its exit-code contract, so the set is part of the public surface.
enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  kDivisionByZero,
  kDivisionByZeroPoly,
  kNonFinite,
  kNonConvergence,
  kDuplicatePole,
  kZeroResidue,
  kNotStrictlyProper,
  kMultiplePole,
  kIrrationalPole,
  kPoleAtOrigin,
  kEvalAtPole,
  kInternalInconsistency,
  kDegenerateDenominator,
  kSingularSystem,
  kEvalAtSingularity,
  kNoRegularPolygon,
  kSubdominantTie,
  kAllDominant,
  kDominantRootAnomaly,
  kResidueClassMismatch,
  kInsufficientData,
  kNotAnOmegaRoot,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kDuplicatePole: return "DuplicatePole";
    case ErrorCode::kZeroResidue: return "ZeroResidue";
    case ErrorCode::kNotStrictlyProper: return "NotStrictlyProper";
    case ErrorCode::kMultiplePole: return "MultiplePole";
    case ErrorCode::kIrrationalPole: return "IrrationalPole";
    case ErrorCode::kPoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::kEvalAtPole: return "EvalAtPole";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kEvalAtSingularity: return "EvalAtSingularity";
    case ErrorCode::kNoRegularPolygon: return "NoRegularPolygon";
    case ErrorCode::kSubdominantTie: return "SubdominantTie";
    case ErrorCode::kAllDominant: return "AllDominant";
    case ErrorCode::kDominantRootAnomaly: return "DominantRootAnomaly";
    case ErrorCode::kResidueClassMismatch: return "ResidueClassMismatch";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kNotAnOmegaRoot: return "NotAnOmegaRoot";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace padelimit

#endif  // PADELIMIT_ERROR_HPP_

// error.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Copyright 2026 The entropia-cpp Authors.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entropia {

enum class ErrorCode {
  // command line
  kUnknownOption,
  kMissingArgument,
  kConflictingMeasures,
  kSkipsWithoutCpm,
  kNoMeasure,
  // input files
  kIo,
  kUnknownExtension,
  kMalformedXml,
  kMissingConceptName,
  kDanglingArc,
  kNonPositiveWeight,
  kSilentTransitionUnsupported,
  kParseError,
  kStochasticSumViolation,
  kDuplicateTransition,
  kUnreachableNode,
  kDeadEndNode,
  kEmptyLog,
  // semantic rejections
  kIncompatibleFormat,
  kUnboundedModel,
  kNoAcceptingState,
  kNondeterministicStochasticModel,
  kNonDeadlockFinalMarking,
  kStateSpaceExceeded,
  kEmptyConjunction,
  kNonTerminatingSdfa,
  kInvalidAutomaton,
  // numerics
  kNotConverged,
};

enum class ErrorCategory { kUsage, kInput, kSemantic, kNumerical };

constexpr ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownOption:
    case ErrorCode::kMissingArgument:
    case ErrorCode::kConflictingMeasures:
    case ErrorCode::kSkipsWithoutCpm:
    case ErrorCode::kNoMeasure:
      return ErrorCategory::kUsage;
    case ErrorCode::kIo:
    case ErrorCode::kUnknownExtension:
    case ErrorCode::kMalformedXml:
    case ErrorCode::kMissingConceptName:
    case ErrorCode::kDanglingArc:
    case ErrorCode::kNonPositiveWeight:
    case ErrorCode::kSilentTransitionUnsupported:
    case ErrorCode::kParseError:
    case ErrorCode::kStochasticSumViolation:
    case ErrorCode::kDuplicateTransition:
    case ErrorCode::kUnreachableNode:
    case ErrorCode::kDeadEndNode:
    case ErrorCode::kEmptyLog:
      return ErrorCategory::kInput;
    case ErrorCode::kNotConverged:
      return ErrorCategory::kNumerical;
    default:
      return ErrorCategory::kSemantic;
  }
}

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownOption: return "UnknownOption";
    case ErrorCode::kMissingArgument: return "MissingArgument";
    case ErrorCode::kConflictingMeasures: return "ConflictingMeasures";
    case ErrorCode::kSkipsWithoutCpm: return "SkipsWithoutCpm";
    case ErrorCode::kNoMeasure: return "NoMeasure";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kUnknownExtension: return "UnknownExtension";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kMissingConceptName: return "MissingConceptName";
    case ErrorCode::kDanglingArc: return "DanglingArc";
    case ErrorCode::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::kSilentTransitionUnsupported: return "SilentTransitionUnsupported";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kStochasticSumViolation: return "StochasticSumViolation";
    case ErrorCode::kDuplicateTransition: return "DuplicateTransition";
    case ErrorCode::kUnreachableNode: return "UnreachableNode";
    case ErrorCode::kDeadEndNode: return "DeadEndNode";
    case ErrorCode::kEmptyLog: return "EmptyLog";
    case ErrorCode::kIncompatibleFormat: return "IncompatibleFormat";
    case ErrorCode::kUnboundedModel: return "UnboundedModel";
    case ErrorCode::kNoAcceptingState: return "NoAcceptingState";
    case ErrorCode::kNondeterministicStochasticModel: return "NondeterministicStochasticModel";
    case ErrorCode::kNonDeadlockFinalMarking: return "NonDeadlockFinalMarking";
    case ErrorCode::kStateSpaceExceeded: return "StateSpaceExceeded";
    case ErrorCode::kEmptyConjunction: return "EmptyConjunction";
    case ErrorCode::kNonTerminatingSdfa: return "NonTerminatingSdfa";
    case ErrorCode::kInvalidAutomaton: return "InvalidAutomaton";
    case ErrorCode::kNotConverged: return "NotConverged";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code,
/// so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace entropia

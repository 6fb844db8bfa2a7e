// Copyright 2026 The pwlab Authors
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

#include "pwlab/error.hpp"

namespace pwlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kUnknownCandidate: return "UnknownCandidate";
    case ErrorCode::kCandidateMismatch: return "CandidateMismatch";
    case ErrorCode::kOverlappingTiers: return "OverlappingTiers";
    case ErrorCode::kDuplicateCandidate: return "DuplicateCandidate";
    case ErrorCode::kNotLinear: return "NotLinear";
    case ErrorCode::kTooFewCandidates: return "TooFewCandidates";
    case ErrorCode::kNonMonotoneVector: return "NonMonotoneVector";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kScoreOverflow: return "ScoreOverflow";
    case ErrorCode::kEmptyBoard: return "EmptyBoard";
    case ErrorCode::kSingletonCandidateSet: return "SingletonCandidateSet";
    case ErrorCode::kScoreNotFixed: return "ScoreNotFixed";
    case ErrorCode::kRuleUnsupportedByAlgorithm:
      return "RuleUnsupportedByAlgorithm";
    case ErrorCode::kNotAnExtension: return "NotAnExtension";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kUnknownElement: return "UnknownElement";
    case ErrorCode::kNonpositiveK: return "NonpositiveK";
    case ErrorCode::kConditionOneViolated: return "ConditionOneViolated";
    case ErrorCode::kConditionTwoViolated: return "ConditionTwoViolated";
    case ErrorCode::kConstructionInfeasible: return "ConstructionInfeasible";
    case ErrorCode::kNotAHittingSet: return "NotAHittingSet";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pwlab

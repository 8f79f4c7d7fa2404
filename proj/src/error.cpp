// Copyright 2026 The isotree Authors
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

#include "isotree/error.hpp"

namespace isotree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kDegreeExceedsAmbient: return "DegreeExceedsAmbient";
    case ErrorCode::kSingletonDomain: return "SingletonDomain";
    case ErrorCode::kDomainTooSmall: return "DomainTooSmall";
    case ErrorCode::kNotALeaf: return "NotALeaf";
    case ErrorCode::kBlueBlueEdge: return "BlueBlueEdge";
    case ErrorCode::kRedLeaf: return "RedLeaf";
    case ErrorCode::kRedDegreeOutOfRange: return "RedDegreeOutOfRange";
    case ErrorCode::kTreeTooSmall: return "TreeTooSmall";
    case ErrorCode::kDegenerateColoring: return "DegenerateColoring";
    case ErrorCode::kNotARedRedEdge: return "NotARedRedEdge";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kTooFewParts: return "TooFewParts";
    case ErrorCode::kTooManyParts: return "TooManyParts";
    case ErrorCode::kPivotNotBoundary: return "PivotNotBoundary";
    case ErrorCode::kInvalidStem: return "InvalidStem";
    case ErrorCode::kPartCountMismatch: return "PartCountMismatch";
    case ErrorCode::kNotFull: return "NotFull";
    case ErrorCode::kBoundaryTooSmall: return "BoundaryTooSmall";
    case ErrorCode::kGlueMapDomainMismatch: return "GlueMapDomainMismatch";
    case ErrorCode::kGlueMapNotInjective: return "GlueMapNotInjective";
    case ErrorCode::kGlueImageNotBoundary: return "GlueImageNotBoundary";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<int> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace isotree

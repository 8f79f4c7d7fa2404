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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isotree {

// Every failure mode of the library. Index-carrying kinds (NotFull,
// BoundaryTooSmall, ...) name the offending component through Error::index().
enum class ErrorCode {
  kBadParameter,
  kNotATree,
  kDegreeExceedsAmbient,
  kSingletonDomain,
  kDomainTooSmall,
  kNotALeaf,
  kBlueBlueEdge,
  kRedLeaf,
  kRedDegreeOutOfRange,
  kTreeTooSmall,
  kDegenerateColoring,
  kNotARedRedEdge,
  kDegreeOverflow,
  kTooFewParts,
  kTooManyParts,
  kPivotNotBoundary,
  kInvalidStem,
  kPartCountMismatch,
  kNotFull,
  kBoundaryTooSmall,
  kGlueMapDomainMismatch,
  kGlueMapNotInjective,
  kGlueImageNotBoundary,
  kParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<int> index_;
};

}  // namespace isotree

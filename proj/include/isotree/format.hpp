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

// Plain-text file formats (domain, stem, reconstruction datum; all v1, LF
// line endings) and Graphviz DOT rendering.
//
//   isotree-domain v1      isotree-stem v1        isotree-datum v1
//   d <int>                n <int>                d <int>
//   n <int>                red <ids...>           stem { <stem file> }
//   e <u> <v>  (n-1 x)     blue <ids...>          component <i> { <domain file> }
//                          e <u> <v>  (n-1 x)     glue b=<i> red=<x> leaf=<z>
//
// Malformed input raises Error{kParseError} naming the offending line;
// well-formed input that violates a structural invariant raises the error
// of the corresponding constructor (kNotATree, kDegreeExceedsAmbient, ...).

#include <string>
#include <string_view>

#include "isotree/domain.hpp"
#include "isotree/glue.hpp"
#include "isotree/stem.hpp"

namespace isotree {

enum class FileKind { kDomain, kStem, kDatum, kUnknown };

// Looks at the header line only.
FileKind detect_kind(std::string_view text);

std::string write_domain(const Domain& dom);
Domain parse_domain(std::string_view text);

std::string write_stem(const StemDiagram& sd);
StemDiagram parse_stem(std::string_view text);

struct DatumFile {
  int d = 2;
  ReconstructionDatum datum;
};

std::string write_datum(const ReconstructionDatum& datum, int d);
DatumFile parse_datum(std::string_view text);

// Leaves are filled circles, residual vertices filled double circles,
// interior vertices plain circles.
std::string domain_to_dot(const Domain& dom);
// Red and blue fills; red-red edges drawn red.
std::string stem_to_dot(const StemDiagram& sd);

}  // namespace isotree

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

// Gluing domains at a shared boundary vertex, and rebuilding a domain from a
// stem diagram, a list of full domains and maps gluing the stem's red
// vertices onto boundary leaves of those domains.

#include <cstdint>
#include <map>
#include <vector>

#include "isotree/domain.hpp"
#include "isotree/stem.hpp"

namespace isotree {

// Parts glued at one vertex: pivots[i] is the copy of the shared vertex p
// inside parts[i]. Parts share nothing but p.
struct GlueSpec {
  std::vector<Domain> parts;
  std::vector<Vertex> pivots;
};

// Checks 2 <= m <= d, a common d, |D_i| >= 2, p_i on the boundary of D_i and
// sum of deg_{D_i}(p_i) <= d. Throws kTooFewParts, kTooManyParts,
// kBadParameter, kSingletonDomain, kPivotNotBoundary or kDegreeOverflow.
void validate_glue_spec(const GlueSpec& spec);

// The glued domain. The shared vertex p is vertex 0; the remaining vertices
// of each part follow, part by part, in ascending original id.
Domain glue_at(const GlueSpec& spec);

// sum tau(D_i) + (m-1) if p stays on the boundary, sum tau(D_i) - (d-m)
// otherwise.
std::int64_t tau_glue_predicted(const GlueSpec& spec);

// The optimality criterion for a glued domain, evaluated on the parts.
bool glue_optimal(const GlueSpec& spec);

struct ReconstructionDatum {
  StemDiagram stem = StemDiagram::trivial();
  // parts[i] is the full domain F_i attached at the i-th blue vertex b_i
  // (ascending stem id).
  std::vector<Domain> parts;
  // glue[i] maps every stem neighbor x of b_i to the vertex g_i(x) of parts[i].
  std::vector<std::map<Vertex, Vertex>> glue;
};

// Throws kInvalidStem, kPartCountMismatch, kBadParameter (ambient degree
// mismatch), kNotFull, kBoundaryTooSmall, kGlueMapDomainMismatch,
// kGlueMapNotInjective or kGlueImageNotBoundary; index() names the part.
void validate_datum(const ReconstructionDatum& datum, int d);

struct Reconstruction {
  Domain domain;
  // The projection onto the stem: reds to themselves, B_i onto b_i.
  std::vector<Vertex> projection;
  // Stem vertex -> vertex of the domain (reds only; -1 for blue).
  std::vector<Vertex> red_image;
  // part_image[i][z] is the image of vertex z of parts[i].
  std::vector<std::vector<Vertex>> part_image;
};

// Reds occupy vertices 0..r-1 in ascending stem id; each part's unglued
// vertices follow in part order.
Reconstruction reconstruct(const ReconstructionDatum& datum, int d);

// m + l <= d - 1.
bool reconstruct_optimal(const ReconstructionDatum& datum, int d);

}  // namespace isotree

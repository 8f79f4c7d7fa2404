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

// Canonical decomposition of a domain: the components B_i of D minus R(D),
// the full domains F_i = B_i plus the residual vertices next to B_i, and the
// stem obtained by contracting every B_i to a blue vertex b_i.

#include <vector>

#include "isotree/domain.hpp"
#include "isotree/glue.hpp"
#include "isotree/stem.hpp"

namespace isotree {

struct FullPart {
  Domain domain;
  std::vector<Vertex> to_host;  // local id -> vertex of D, ascending
};

struct StemProjection {
  // Blue vertex i is b_i; residual vertices follow in ascending id of D.
  StemDiagram diagram;
  std::vector<Vertex> projection;  // vertex of D -> stem vertex
};

struct Decomposition {
  std::vector<VertexSet> components;  // B_i, ordered by minimum vertex
  std::vector<FullPart> full_parts;   // F_i
  VertexSet residual;                 // R(D)
  VertexSet residual_core;            // R_0 = D minus the union of the F_i
  StemProjection stem;
};

// Full domains produce a single component and the trivial stem.
// kSingletonDomain for |D| = 1.
Decomposition full_components(const Domain& dom);

StemProjection stem_of(const Domain& dom);

// The reconstruction datum of D: its stem, the F_i and the identity gluing
// maps along R(D).
ReconstructionDatum decompose(const Domain& dom);

}  // namespace isotree

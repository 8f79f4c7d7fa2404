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

// Domains of the d-regular tree T_d, stored intrinsically as a finite tree
// of maximum degree <= d together with the ambient degree d. A vertex of
// internal degree d is interior; anything smaller lies on the boundary.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isotree/tree.hpp"

namespace isotree {

class Domain {
 public:
  // kBadParameter if d < 2, kDegreeExceedsAmbient if some vertex has more
  // than d neighbors.
  Domain(FiniteTree tree, int d);

  const FiniteTree& tree() const { return tree_; }
  int d() const { return d_; }
  int size() const { return tree_.size(); }
  int degree(Vertex v) const { return tree_.degree(v); }
  bool on_boundary(Vertex v) const { return tree_.degree(v) < d_; }

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  FiniteTree tree_;
  int d_;
};

struct BoundaryReport {
  VertexSet boundary;  // vertices with deg_D < d
  VertexSet leaves;    // boundary vertices of degree 1
  VertexSet residual;  // boundary vertices of degree 2..d-1
  std::int64_t outer_size = 0;
  std::int64_t edge_boundary_size = 0;
  std::optional<std::int64_t> tau;  // absent for single-vertex domains
  bool full = false;
};

// Throws std::logic_error if the two outer-boundary counts ever disagree.
BoundaryReport boundary_report(const Domain& dom);

// (d-1)|dD| - (d-2)|D| - 2. kSingletonDomain for |D| = 1.
std::int64_t tau_closed(const Domain& dom);

// R(D) is empty. kSingletonDomain for |D| = 1.
bool is_full(const Domain& dom);

// The seven characterizations of full domains, in order:
// dD = L(D); R(D) empty; tau = 0; (d-1)|dD| = (d-2)|D| + 2; optimal with
// |D| = 2 mod (d-1); D minus dD connected; D = D1 u d'D1 for D1 = D minus dD.
struct FullConditions {
  std::array<bool, 7> holds{};
  bool consistent() const;
};

// kDomainTooSmall for |D| <= 2.
FullConditions full_conditions(const Domain& dom);
bool check_full_equivalences(const Domain& dom);

// Vertex of T_d as a path from a fixed root: the first digit is in
// {0..d-1}, later digits in {0..d-2}.
using TdAddress = std::vector<int>;

// Dot-separated digits; the root renders as the empty string.
std::string to_string(const TdAddress& address);

// The d neighbors of `address` in T_d: parent first (if any), then children
// in ascending digit order.
std::vector<TdAddress> td_neighbors(const TdAddress& address, int d);

// Adjacency-preserving injective placement of the domain in T_d, indexed by
// vertex. Rooted at the smallest centroid; children take digits in
// ascending order of their subtree code (vertex id breaks ties).
std::vector<TdAddress> embed_in_Td(const Domain& dom);

// Removes leaf `v` and renumbers the remaining vertices in order.
// kNotALeaf unless deg_D(v) = 1.
Domain remove_leaf(const Domain& dom, Vertex v);

}  // namespace isotree

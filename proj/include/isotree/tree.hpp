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

// Abstract finite trees on contiguous 0-based vertex ids: validation,
// AHU-style canonical codes, component extraction and exhaustive generation
// of unlabeled trees with bounded maximum degree.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isotree {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// A sorted, duplicate-free set of vertex ids of some host tree.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet all(int n);

  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // Members of {0..n-1} not in this set.
  VertexSet complement(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

class FiniteTree {
 public:
  // Throws Error{kNotATree} unless the edges form a spanning tree on
  // {0..n-1}; ids out of range are reported as kNotATree as well.
  FiniteTree(int n, std::vector<Edge> edges);

  static FiniteTree single_vertex() { return FiniteTree(1, {}); }
  static FiniteTree path(int n);
  // Star K_{1,leaves}; the center is vertex 0.
  static FiniteTree star(int leaves);

  int size() const { return n_; }
  // Normalized so that first < second, sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// A connected vertex subset re-indexed as a standalone tree.
struct Subtree {
  FiniteTree tree;
  std::vector<Vertex> to_host;  // local id -> host id, ascending
};

// `members` must induce a connected subgraph (kNotATree otherwise).
Subtree induced_subtree(const FiniteTree& host, const VertexSet& members);

// Total-order key identifying a tree up to isomorphism.
struct CanonicalCode {
  std::string bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// One or two vertices of minimum eccentricity, ascending.
std::vector<Vertex> centers(const FiniteTree& t);
// One or two vertices minimizing the largest remaining component, ascending.
std::vector<Vertex> centroids(const FiniteTree& t);

// AHU encodings of every rooted subtree of `t` hung from `root`, indexed by
// vertex. An empty `labels` means uncolored.
std::vector<std::string> rooted_subtree_codes(const FiniteTree& t, Vertex root,
                                              std::span<const std::uint8_t> labels = {});

// AHU encoding of `t` rooted at `root`. When `labels` is non-empty it must
// have one entry per vertex and the code respects them.
CanonicalCode rooted_code(const FiniteTree& t, Vertex root,
                          std::span<const std::uint8_t> labels = {});

// Center-rooted AHU code; bicentral trees take the smaller of the two roots.
CanonicalCode canonical_form(const FiniteTree& t,
                             std::span<const std::uint8_t> labels = {});

bool is_isomorphic(const FiniteTree& a, const FiniteTree& b);

// One representative per isomorphism class of trees on n vertices with
// maximum degree <= max_deg, ordered by ascending canonical code.
std::vector<FiniteTree> enumerate_trees(int n, int max_deg);

// Connected components of the subgraph induced on vertices outside
// `remove`, ordered by minimum vertex id.
std::vector<VertexSet> components(const FiniteTree& t, const VertexSet& remove);

// |subset| minus the number of edges induced on it.
int euler_char(const FiniteTree& t, const VertexSet& subset);

}  // namespace isotree

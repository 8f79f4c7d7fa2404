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

// Stem diagrams: finite trees whose vertices are colored red or blue, with
// no blue-blue edge and only blue leaves. They record how full components
// (blue) hang off the residual boundary (red).

#include <cstdint>
#include <optional>
#include <vector>

#include "isotree/tree.hpp"

namespace isotree {

enum class Color : std::uint8_t { kRed, kBlue };

class StemDiagram {
 public:
  // kBadParameter on a color/vertex count mismatch, kBlueBlueEdge, or
  // kRedLeaf (also raised for red vertices of degree 0).
  StemDiagram(FiniteTree tree, std::vector<Color> colors);

  // A single blue vertex.
  static StemDiagram trivial();

  const FiniteTree& tree() const { return tree_; }
  int size() const { return tree_.size(); }
  Color color(Vertex v) const { return colors_[v]; }
  bool is_red(Vertex v) const { return colors_[v] == Color::kRed; }
  bool is_blue(Vertex v) const { return colors_[v] == Color::kBlue; }
  const std::vector<Color>& colors() const { return colors_; }
  VertexSet red() const;
  // Ascending; the i-th entry is the blue vertex b_i.
  VertexSet blue() const;
  bool is_trivial() const;

  friend bool operator==(const StemDiagram&, const StemDiagram&) = default;

 private:
  FiniteTree tree_;
  std::vector<Color> colors_;
};

struct StemCounts {
  int r = 0;         // red vertices
  int m = 0;         // blue vertices
  int l = 0;         // red-red edges
  int tau_star = 0;  // sum over red x of deg(x) - 1
  int chi_red = 0;   // Euler characteristic of the red forest
};

// Recomputes the counts and checks every counting identity; with `d`, also
// requires 2 <= deg(x) <= d-1 for red x (kRedDegreeOutOfRange).
StemCounts validate_stem(const StemDiagram& sd, std::optional<int> d = std::nullopt);

int tau_star(const StemDiagram& sd);

// Color-respecting canonical code.
CanonicalCode canonical_form(const StemDiagram& sd);
bool is_isomorphic(const StemDiagram& a, const StemDiagram& b);

// One diagram per color-respecting isomorphism class with tau* <= tau_max,
// optionally limited to red degree <= d-1. Ordered by (tau*, size, code).
std::vector<StemDiagram> enumerate_stems(int tau_max, std::optional<int> d = std::nullopt);

// Leaves blue, everything else red. kTreeTooSmall for one vertex,
// kDegenerateColoring for two (the coloring would have a blue-blue edge).
StemDiagram stem_from_tree(const FiniteTree& t);

// Subdivides the red-red edge with a new blue vertex (id = old size).
// kNotARedRedEdge otherwise.
StemDiagram insert_blue(const StemDiagram& sd, Edge red_edge);

}  // namespace isotree

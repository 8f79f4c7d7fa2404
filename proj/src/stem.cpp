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

#include "isotree/stem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "isotree/error.hpp"

namespace isotree {

StemDiagram::StemDiagram(FiniteTree tree, std::vector<Color> colors)
    : tree_(std::move(tree)), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != tree_.size()) {
    throw Error(ErrorCode::kBadParameter, "one color per vertex required");
  }
  for (const auto& [u, v] : tree_.edges()) {
    if (is_blue(u) && is_blue(v)) {
      throw Error(ErrorCode::kBlueBlueEdge,
                  "blue vertices " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent");
    }
  }
  for (Vertex v = 0; v < tree_.size(); ++v) {
    if (is_red(v) && tree_.degree(v) < 2) {
      throw Error(ErrorCode::kRedLeaf, "red vertex " + std::to_string(v) + " has degree < 2");
    }
  }
}

StemDiagram StemDiagram::trivial() {
  return StemDiagram(FiniteTree::single_vertex(), {Color::kBlue});
}

VertexSet StemDiagram::red() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (is_red(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

VertexSet StemDiagram::blue() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v) {
    if (is_blue(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool StemDiagram::is_trivial() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == Color::kRed; });
}

StemCounts validate_stem(const StemDiagram& sd, std::optional<int> d) {
  const FiniteTree& t = sd.tree();
  StemCounts c;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (sd.is_red(v)) {
      ++c.r;
      c.tau_star += t.degree(v) - 1;
      if (d && (t.degree(v) < 2 || t.degree(v) > *d - 1)) {
        throw Error(ErrorCode::kRedDegreeOutOfRange,
                    "red vertex " + std::to_string(v) + " has degree " +
                        std::to_string(t.degree(v)) + " outside [2, " + std::to_string(*d - 1) + "]");
      }
    } else {
      ++c.m;
    }
  }
  for (const auto& [u, v] : t.edges()) {
    if (sd.is_red(u) && sd.is_red(v)) ++c.l;
  }
  c.chi_red = euler_char(t, sd.red());

  bool ok = c.m + c.l == c.tau_star + 1 && c.tau_star == t.size() - 1 - c.chi_red &&
            c.chi_red == c.r - c.l;
  if (c.r > 0) {
    ok = ok && c.m >= 2 && c.r <= c.tau_star && c.r - c.l >= 1 &&
         c.tau_star + 2 - c.r <= c.m && c.m <= c.tau_star + 1 && c.tau_star <= t.size() - 2;
  } else {
    ok = ok && t.size() == 1;
  }
  if (!ok) throw std::logic_error("stem counting identity violated");
  return c;
}

int tau_star(const StemDiagram& sd) {
  int total = 0;
  for (Vertex v = 0; v < sd.size(); ++v) {
    if (sd.is_red(v)) total += sd.tree().degree(v) - 1;
  }
  return total;
}

namespace {

std::vector<std::uint8_t> color_labels(const std::vector<Color>& colors) {
  std::vector<std::uint8_t> labels(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    labels[i] = colors[i] == Color::kRed ? 'r' : 'b';
  }
  return labels;
}

}  // namespace

CanonicalCode canonical_form(const StemDiagram& sd) {
  const auto labels = color_labels(sd.colors());
  return canonical_form(sd.tree(), labels);
}

bool is_isomorphic(const StemDiagram& a, const StemDiagram& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<StemDiagram> enumerate_stems(int tau_max, std::optional<int> d) {
  if (tau_max < 0) return {};
  using Key = std::tuple<int, int, CanonicalCode>;
  std::map<Key, StemDiagram> found;
  for (int n = 1; n <= 2 * tau_max + 1; ++n) {
    for (const FiniteTree& t : enumerate_trees(n, std::max(n - 1, 0))) {
      std::vector<Vertex> internal;
      for (Vertex v = 0; v < n; ++v) {
        if (t.degree(v) >= 2) internal.push_back(v);
      }
      const int k = static_cast<int>(internal.size());
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        // Bit i set: internal[i] is blue.
        std::vector<Color> colors(n, Color::kBlue);
        int tau = 0;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
          if (mask >> i & 1) continue;
          const Vertex v = internal[i];
          colors[v] = Color::kRed;
          tau += t.degree(v) - 1;
          if (d && t.degree(v) > *d - 1) ok = false;
        }
        if (!ok || tau > tau_max) continue;
        for (const auto& [u, v] : t.edges()) {
          if (colors[u] == Color::kBlue && colors[v] == Color::kBlue) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        StemDiagram sd(t, std::move(colors));
        Key key{tau, n, canonical_form(sd)};
        found.try_emplace(std::move(key), std::move(sd));
      }
    }
  }
  std::vector<StemDiagram> out;
  out.reserve(found.size());
  for (auto& [key, sd] : found) out.push_back(std::move(sd));
  return out;
}

StemDiagram stem_from_tree(const FiniteTree& t) {
  if (t.size() < 2) throw Error(ErrorCode::kTreeTooSmall, "need at least two vertices");
  if (t.size() == 2) {
    throw Error(ErrorCode::kDegenerateColoring, "both endpoints of an edge would be blue");
  }
  std::vector<Color> colors(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    colors[v] = t.degree(v) == 1 ? Color::kBlue : Color::kRed;
  }
  return StemDiagram(t, std::move(colors));
}

StemDiagram insert_blue(const StemDiagram& sd, Edge red_edge) {
  auto [x, y] = red_edge;
  const int n = sd.size();
  if (x < 0 || y < 0 || x >= n || y >= n || !sd.tree().adjacent(x, y) || !sd.is_red(x) ||
      !sd.is_red(y)) {
    throw Error(ErrorCode::kNotARedRedEdge,
                "(" + std::to_string(x) + "," + std::to_string(y) + ") is not a red-red edge");
  }
  if (x > y) std::swap(x, y);
  std::vector<Edge> edges;
  for (const Edge& e : sd.tree().edges()) {
    if (e != Edge{x, y}) edges.push_back(e);
  }
  edges.emplace_back(x, n);
  edges.emplace_back(y, n);
  std::vector<Color> colors = sd.colors();
  colors.push_back(Color::kBlue);
  return StemDiagram(FiniteTree(n + 1, std::move(edges)), std::move(colors));
}

}  // namespace isotree

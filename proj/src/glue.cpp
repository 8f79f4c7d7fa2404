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

#include "isotree/glue.hpp"

#include <set>
#include <string>

#include "isotree/error.hpp"
#include "isotree/profile.hpp"

namespace isotree {

namespace {

int degree_at_pivots(const GlueSpec& spec) {
  int total = 0;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    total += spec.parts[i].degree(spec.pivots[i]);
  }
  return total;
}

}  // namespace

void validate_glue_spec(const GlueSpec& spec) {
  const int m = static_cast<int>(spec.parts.size());
  if (m < 2) throw Error(ErrorCode::kTooFewParts, "gluing needs at least two parts");
  if (static_cast<int>(spec.pivots.size()) != m) {
    throw Error(ErrorCode::kBadParameter, "one pivot per part required");
  }
  const int d = spec.parts.front().d();
  if (m > d) throw Error(ErrorCode::kTooManyParts, "at most d parts can share a vertex");
  for (int i = 0; i < m; ++i) {
    const Domain& part = spec.parts[i];
    if (part.d() != d) throw Error(ErrorCode::kBadParameter, "parts disagree on d", i);
    if (part.size() < 2) throw Error(ErrorCode::kSingletonDomain, "parts need |D_i| >= 2", i);
    const Vertex p = spec.pivots[i];
    if (p < 0 || p >= part.size() || !part.on_boundary(p)) {
      throw Error(ErrorCode::kPivotNotBoundary, "pivot is not a boundary vertex", i);
    }
  }
  if (degree_at_pivots(spec) > d) {
    throw Error(ErrorCode::kDegreeOverflow,
                "glued vertex would have degree " + std::to_string(degree_at_pivots(spec)));
  }
}

Domain glue_at(const GlueSpec& spec) {
  validate_glue_spec(spec);
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const FiniteTree& t = spec.parts[i].tree();
    std::vector<Vertex> to_glued(t.size());
    for (Vertex v = 0; v < t.size(); ++v) {
      to_glued[v] = v == spec.pivots[i] ? 0 : next++;
    }
    for (const auto& [u, v] : t.edges()) edges.emplace_back(to_glued[u], to_glued[v]);
  }
  return Domain(FiniteTree(next, std::move(edges)), spec.parts.front().d());
}

std::int64_t tau_glue_predicted(const GlueSpec& spec) {
  validate_glue_spec(spec);
  const std::int64_t m = static_cast<std::int64_t>(spec.parts.size());
  const int d = spec.parts.front().d();
  std::int64_t sum = 0;
  for (const Domain& part : spec.parts) sum += tau_closed(part);
  if (degree_at_pivots(spec) < d) return sum + (m - 1);
  return sum - (d - m);
}

bool glue_optimal(const GlueSpec& spec) {
  return tau_glue_predicted(spec) <= spec.parts.front().d() - 2;
}

void validate_datum(const ReconstructionDatum& datum, int d) {
  const StemDiagram& stem = datum.stem;
  try {
    validate_stem(stem, d);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidStem, e.what());
  }
  const VertexSet blue = stem.blue();
  const int m = blue.size();
  if (static_cast<int>(datum.parts.size()) != m || static_cast<int>(datum.glue.size()) != m) {
    throw Error(ErrorCode::kPartCountMismatch,
                "stem has " + std::to_string(m) + " blue vertices but datum lists " +
                    std::to_string(datum.parts.size()) + " parts and " +
                    std::to_string(datum.glue.size()) + " gluing maps");
  }
  for (int i = 0; i < m; ++i) {
    const Domain& part = datum.parts[i];
    const Vertex b = blue.members()[i];
    if (part.d() != d) throw Error(ErrorCode::kBadParameter, "part has a different d", i);
    if (part.size() < 2 || !is_full(part)) {
      throw Error(ErrorCode::kNotFull, "part " + std::to_string(i) + " is not a full domain", i);
    }
    const auto neighbors = stem.tree().neighbors(b);
    const BoundaryReport report = boundary_report(part);
    if (report.boundary.size() < static_cast<int>(neighbors.size())) {
      throw Error(ErrorCode::kBoundaryTooSmall,
                  "part " + std::to_string(i) + " has fewer boundary vertices than deg(b_i)", i);
    }
    const auto& g = datum.glue[i];
    bool same_domain = g.size() == neighbors.size();
    for (Vertex x : neighbors) same_domain = same_domain && g.count(x) == 1;
    if (!same_domain) {
      throw Error(ErrorCode::kGlueMapDomainMismatch,
                  "gluing map " + std::to_string(i) + " must be defined exactly on N(b_i)", i);
    }
    std::set<Vertex> images;
    for (const auto& [x, z] : g) {
      if (z < 0 || z >= part.size() || !report.boundary.contains(z)) {
        throw Error(ErrorCode::kGlueImageNotBoundary,
                    "g_" + std::to_string(i) + "(" + std::to_string(x) + ") is not a boundary vertex", i);
      }
      if (!images.insert(z).second) {
        throw Error(ErrorCode::kGlueMapNotInjective,
                    "gluing map " + std::to_string(i) + " is not injective", i);
      }
    }
  }
}

Reconstruction reconstruct(const ReconstructionDatum& datum, int d) {
  validate_datum(datum, d);
  const StemDiagram& stem = datum.stem;
  const VertexSet blue = stem.blue();

  Reconstruction out{Domain(FiniteTree::single_vertex(), d), {}, {}, {}};
  out.red_image.assign(stem.size(), -1);
  Vertex next = 0;
  for (Vertex x = 0; x < stem.size(); ++x) {
    if (stem.is_red(x)) {
      out.red_image[x] = next++;
      out.projection.push_back(x);
    }
  }

  std::vector<Edge> edges;
  for (const auto& [u, v] : stem.tree().edges()) {
    if (stem.is_red(u) && stem.is_red(v)) edges.emplace_back(out.red_image[u], out.red_image[v]);
  }
  for (std::size_t i = 0; i < datum.parts.size(); ++i) {
    const FiniteTree& f = datum.parts[i].tree();
    std::vector<Vertex> image(f.size(), -1);
    for (const auto& [x, z] : datum.glue[i]) image[z] = out.red_image[x];
    for (Vertex z = 0; z < f.size(); ++z) {
      if (image[z] < 0) {
        image[z] = next++;
        out.projection.push_back(blue.members()[i]);
      }
    }
    for (const auto& [u, v] : f.edges()) edges.emplace_back(image[u], image[v]);
    out.part_image.push_back(std::move(image));
  }
  out.domain = Domain(FiniteTree(next, std::move(edges)), d);
  return out;
}

bool reconstruct_optimal(const ReconstructionDatum& datum, int d) {
  validate_datum(datum, d);
  const StemCounts c = validate_stem(datum.stem, d);
  return c.m + c.l <= d - 1;
}

}  // namespace isotree

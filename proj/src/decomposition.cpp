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

#include "isotree/decomposition.hpp"

#include <algorithm>

#include "isotree/error.hpp"

namespace isotree {

Decomposition full_components(const Domain& dom) {
  if (dom.size() < 2) throw Error(ErrorCode::kSingletonDomain, "decomposition needs |D| >= 2");
  const FiniteTree& t = dom.tree();
  const int n = t.size();

  std::vector<Vertex> residual;
  for (Vertex v = 0; v < n; ++v) {
    if (dom.on_boundary(v) && dom.degree(v) >= 2) residual.push_back(v);
  }
  Decomposition dec{.components = {},
                    .full_parts = {},
                    .residual = VertexSet(residual),
                    .residual_core = {},
                    .stem = {StemDiagram::trivial(), {}}};
  dec.components = components(t, dec.residual);
  const int m = static_cast<int>(dec.components.size());

  std::vector<int> component_of(n, -1);
  for (int i = 0; i < m; ++i) {
    for (Vertex v : dec.components[i]) component_of[v] = i;
  }

  std::vector<char> covered(n, 0);
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> members(dec.components[i].begin(), dec.components[i].end());
    for (Vertex x : dec.residual) {
      const auto nb = t.neighbors(x);
      if (std::any_of(nb.begin(), nb.end(), [&](Vertex y) { return component_of[y] == i; })) {
        members.push_back(x);
      }
    }
    Subtree sub = induced_subtree(t, VertexSet(std::move(members)));
    for (Vertex v : sub.to_host) covered[v] = 1;
    dec.full_parts.push_back(FullPart{Domain(std::move(sub.tree), dom.d()), std::move(sub.to_host)});
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) core.push_back(v);
  }
  dec.residual_core = VertexSet(std::move(core));

  // Stem: blue i stands for B_i, red residual vertices follow.
  std::vector<Vertex> projection(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (component_of[v] >= 0) projection[v] = component_of[v];
  }
  int next = m;
  for (Vertex x : dec.residual) projection[x] = next++;

  std::vector<Edge> edges;
  for (const auto& [u, v] : t.edges()) {
    if (projection[u] != projection[v]) edges.emplace_back(projection[u], projection[v]);
  }
  std::vector<Color> colors(next, Color::kRed);
  std::fill(colors.begin(), colors.begin() + m, Color::kBlue);
  dec.stem = StemProjection{StemDiagram(FiniteTree(next, std::move(edges)), std::move(colors)),
                            std::move(projection)};
  return dec;
}

StemProjection stem_of(const Domain& dom) { return full_components(dom).stem; }

ReconstructionDatum decompose(const Domain& dom) {
  Decomposition dec = full_components(dom);
  const int m = static_cast<int>(dec.components.size());
  ReconstructionDatum datum;
  datum.glue.resize(m);
  for (int i = 0; i < m; ++i) {
    const FullPart& part = dec.full_parts[i];
    for (Vertex local = 0; local < static_cast<Vertex>(part.to_host.size()); ++local) {
      const Vertex host = part.to_host[local];
      if (dec.residual.contains(host)) datum.glue[i][dec.stem.projection[host]] = local;
    }
    datum.parts.push_back(part.domain);
  }
  datum.stem = std::move(dec.stem.diagram);
  return datum;
}

}  // namespace isotree

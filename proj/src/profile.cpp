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

#include "isotree/profile.hpp"

#include <string>
#include <vector>

#include "isotree/error.hpp"

namespace isotree {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParameter, what);
}

}  // namespace

std::int64_t profile_value(int d, std::int64_t k) {
  require(d >= 2, "d must be >= 2");
  require(k >= 1, "k must be >= 1");
  if (k == 1) return 1;
  const std::int64_t num = static_cast<std::int64_t>(d - 2) * k + 2;
  const std::int64_t den = d - 1;
  return (num + den - 1) / den;
}

bool is_optimal(const Domain& dom) {
  if (dom.size() == 1) return true;
  return tau_closed(dom) <= dom.d() - 2;
}

EuclidSplit euclid_split(int d, std::int64_t k) {
  require(d >= 3, "euclid_split needs d >= 3");
  require(k >= d + 1, "euclid_split needs k >= d + 1");
  const std::int64_t den = d - 1;
  EuclidSplit e;
  e.s = (k - 2 + den - 1) / den;
  e.q = den * e.s - (k - 2);
  return e;
}

Domain witness(int d, std::int64_t k) {
  require(d >= 2, "d must be >= 2");
  require(k >= 1, "k must be >= 1");
  if (k <= d || d == 2) return Domain(FiniteTree::path(static_cast<int>(k)), d);

  const auto [s, q] = euclid_split(d, k);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
  Vertex next = static_cast<Vertex>(s);
  for (Vertex i = 0; i < s; ++i) {
    const int path_degree = (s == 1) ? 0 : (i == 0 || i == s - 1) ? 1 : 2;
    int outer = d - path_degree;
    if (i == s - 1) outer -= static_cast<int>(q);
    for (int j = 0; j < outer; ++j) edges.emplace_back(i, next++);
  }
  return Domain(FiniteTree(next, std::move(edges)), d);
}

Domain ball(int d, int r) {
  require(d >= 3, "balls are built for d >= 3");
  require(r >= 0, "radius must be >= 0");
  // 1 + d((d-1)^r - 1)/(d-2) must stay addressable.
  std::int64_t size = 1;
  std::int64_t shell = d;
  for (int i = 0; i < r; ++i) {
    size += shell;
    require(size <= 50'000'000, "ball too large");
    shell *= d - 1;
  }
  std::vector<Edge> edges;
  edges.reserve(size - 1);
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (int depth = 0; depth < r; ++depth) {
    std::vector<Vertex> grown;
    for (Vertex x : frontier) {
      const int kids = depth == 0 ? d : d - 1;
      for (int j = 0; j < kids; ++j) {
        edges.emplace_back(x, next);
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  return Domain(FiniteTree(next, std::move(edges)), d);
}

CheegerValues cheeger(int d) {
  require(d >= 2, "d must be >= 2");
  return CheegerValues{Rational(d - 2, d - 1), d - 2, d - 2};
}

}  // namespace isotree

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

// Shared fixtures and generators for the test suites.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "isotree/domain.hpp"
#include "isotree/error.hpp"
#include "isotree/tree.hpp"

namespace isotree::testing {

// The error code thrown by f, or a test failure if nothing was thrown.
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no isotree::Error thrown";
  return ErrorCode::kParseError;
}

// Residual vertex 0 joined to three centers, each carrying four leaves (d = 5).
inline Domain three_star() {
  std::vector<Edge> e;
  int next = 4;
  for (int c = 1; c <= 3; ++c) {
    e.emplace_back(0, c);
    for (int j = 0; j < 4; ++j) e.emplace_back(c, next++);
  }
  return Domain(FiniteTree(16, e), 5);
}

// Two residual vertices p = 0 and q = 2. p carries centers 1 and 3 (four
// leaves each) and the leaf 4; q carries three leaves (d = 5).
inline Domain two_hub() {
  std::vector<Edge> e = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  for (int v = 5; v <= 8; ++v) e.emplace_back(1, v);
  for (int v = 9; v <= 12; ++v) e.emplace_back(3, v);
  for (int v = 13; v <= 15; ++v) e.emplace_back(2, v);
  return Domain(FiniteTree(16, e), 5);
}

// Decodes a Prüfer sequence over {0..n-1}.
inline FiniteTree from_pruefer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<Edge> edges;
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return FiniteTree(n, edges);
}

inline FiniteTree random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return FiniteTree::single_vertex();
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  return from_pruefer(seq);
}

// Random tree with maximum degree at most max_deg, grown by attaching leaves.
inline FiniteTree random_bounded_tree(int n, int max_deg, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (degree[u] < max_deg) open.push_back(u);
    }
    const int u = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  }
  return FiniteTree(n, edges);
}

inline FiniteTree relabel(const FiniteTree& t, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[v], perm[u]);
  return FiniteTree(t.size(), edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Size of the automorphism group, by trying every permutation.
inline std::int64_t automorphisms(const FiniteTree& t) {
  std::vector<int> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : t.edges()) {
      if (!t.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace isotree::testing

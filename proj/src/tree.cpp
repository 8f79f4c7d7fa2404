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

#include "isotree/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "isotree/error.hpp"

namespace isotree {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return VertexSet(std::move(v));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(int n) const {
  std::vector<Vertex> out;
  out.reserve(n > size() ? n - size() : 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

FiniteTree::FiniteTree(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw Error(ErrorCode::kNotATree, "a tree needs at least one vertex");
  if (static_cast<long long>(edges.size()) != n - 1LL) {
    std::ostringstream msg;
    msg << "expected " << n - 1 << " edges for " << n << " vertices, got " << edges.size();
    throw Error(ErrorCode::kNotATree, msg.str());
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") out of range for n=" << n;
      throw Error(ErrorCode::kNotATree, msg.str());
    }
    if (u == v) throw Error(ErrorCode::kNotATree, "self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error(ErrorCode::kNotATree, "duplicate edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  // n-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adjacency_[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::kNotATree, "graph is disconnected");
}

FiniteTree FiniteTree::path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return FiniteTree(n, std::move(edges));
}

FiniteTree FiniteTree::star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return FiniteTree(leaves + 1, std::move(edges));
}

int FiniteTree::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

bool FiniteTree::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

Subtree induced_subtree(const FiniteTree& host, const VertexSet& members) {
  std::vector<Vertex> local(host.size(), -1);
  std::vector<Vertex> to_host(members.begin(), members.end());
  for (int i = 0; i < static_cast<int>(to_host.size()); ++i) local[to_host[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : host.edges()) {
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  return Subtree{FiniteTree(members.size(), std::move(edges)), std::move(to_host)};
}

std::vector<Vertex> centers(const FiniteTree& t) {
  const int n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex x : layer) {
      deg[x] = 0;
      for (Vertex y : t.neighbors(x)) {
        if (--deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

// Parent array and preorder of `t` rooted at `root`.
struct Rooting {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;
};

Rooting root_at(const FiniteTree& t, Vertex root) {
  Rooting r;
  r.parent.assign(t.size(), -1);
  r.order.reserve(t.size());
  std::vector<Vertex> stack{root};
  r.parent[root] = root;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    r.order.push_back(x);
    for (Vertex y : t.neighbors(x)) {
      if (r.parent[y] < 0) {
        r.parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  return r;
}

}  // namespace

std::vector<Vertex> centroids(const FiniteTree& t) {
  const int n = t.size();
  Rooting r = root_at(t, 0);
  std::vector<int> sub(n, 1);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    if (*it != 0) sub[r.parent[*it]] += sub[*it];
  }
  std::vector<int> worst(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    int w = n - sub[v];
    for (Vertex y : t.neighbors(v)) {
      if (y != 0 && r.parent[y] == v) w = std::max(w, sub[y]);
    }
    worst[v] = w;
  }
  int best = *std::min_element(worst.begin(), worst.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (worst[v] == best) out.push_back(v);
  }
  return out;
}

std::vector<std::string> rooted_subtree_codes(const FiniteTree& t, Vertex root,
                                              std::span<const std::uint8_t> labels) {
  Rooting r = root_at(t, root);
  std::vector<std::string> code(t.size());
  std::vector<std::vector<const std::string*>> kids(t.size());
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    Vertex x = *it;
    auto& ch = kids[x];
    std::sort(ch.begin(), ch.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& s = code[x];
    s.push_back('(');
    if (!labels.empty()) s.push_back(static_cast<char>(labels[x]));
    for (const std::string* c : ch) s += *c;
    s.push_back(')');
    if (x != root) kids[r.parent[x]].push_back(&s);
  }
  return code;
}

CanonicalCode rooted_code(const FiniteTree& t, Vertex root,
                          std::span<const std::uint8_t> labels) {
  return CanonicalCode{std::move(rooted_subtree_codes(t, root, labels)[root])};
}

CanonicalCode canonical_form(const FiniteTree& t, std::span<const std::uint8_t> labels) {
  CanonicalCode best;
  bool first = true;
  for (Vertex c : centers(t)) {
    CanonicalCode code = rooted_code(t, c, labels);
    if (first || code < best) best = std::move(code);
    first = false;
  }
  return best;
}

bool is_isomorphic(const FiniteTree& a, const FiniteTree& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<FiniteTree> enumerate_trees(int n, int max_deg) {
  if (n < 1 || max_deg < 0) return {};
  std::map<CanonicalCode, FiniteTree> classes;

  // Rooted trees as canonical level sequences, visited in the successor
  // order of Beyer and Hedetniemi; the root sits at level 0.
  std::vector<int> level(n);
  std::iota(level.begin(), level.end(), 0);
  std::vector<Vertex> last_at_level(n);
  std::vector<int> deg(n);
  while (true) {
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    last_at_level[0] = 0;
    for (Vertex i = 1; i < n && ok; ++i) {
      Vertex parent = last_at_level[level[i] - 1];
      last_at_level[level[i]] = i;
      edges.emplace_back(parent, i);
      ok = ++deg[parent] <= max_deg && ++deg[i] <= max_deg;
    }
    if (ok) {
      FiniteTree t(n, std::move(edges));
      CanonicalCode code = canonical_form(t);
      classes.try_emplace(std::move(code), std::move(t));
    }

    int p = n - 1;
    while (p > 0 && level[p] == 1) --p;
    if (p <= 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < n; ++i) level[i] = level[i - shift];
  }

  std::vector<FiniteTree> out;
  out.reserve(classes.size());
  for (auto& [code, t] : classes) out.push_back(std::move(t));
  return out;
}

std::vector<VertexSet> components(const FiniteTree& t, const VertexSet& remove) {
  const int n = t.size();
  std::vector<char> blocked(n, 0);
  for (Vertex v : remove) blocked[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (blocked[s]) continue;
    std::vector<Vertex> comp;
    blocked[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : t.neighbors(x)) {
        if (!blocked[y]) {
          blocked[y] = 1;
          stack.push_back(y);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

int euler_char(const FiniteTree& t, const VertexSet& subset) {
  int induced_edges = 0;
  for (const auto& [u, v] : t.edges()) {
    if (subset.contains(u) && subset.contains(v)) ++induced_edges;
  }
  return subset.size() - induced_edges;
}

}  // namespace isotree

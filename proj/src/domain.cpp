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

#include "isotree/domain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "isotree/error.hpp"
#include "isotree/profile.hpp"

namespace isotree {

Domain::Domain(FiniteTree tree, int d) : tree_(std::move(tree)), d_(d) {
  if (d < 2) throw Error(ErrorCode::kBadParameter, "ambient degree must be >= 2");
  if (tree_.max_degree() > d) {
    std::ostringstream msg;
    msg << "vertex degree " << tree_.max_degree() << " exceeds d=" << d;
    throw Error(ErrorCode::kDegreeExceedsAmbient, msg.str());
  }
}

BoundaryReport boundary_report(const Domain& dom) {
  const int n = dom.size();
  const int d = dom.d();
  std::vector<Vertex> boundary, leaves, residual;
  std::int64_t missing = 0;
  std::int64_t excess = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int deg = dom.degree(v);
    if (deg >= d) continue;
    boundary.push_back(v);
    missing += d - deg;
    if (n >= 2) excess += deg - 1;
    if (deg == 1) {
      leaves.push_back(v);
    } else if (deg >= 2) {
      residual.push_back(v);
    }
  }
  const std::int64_t by_size = static_cast<std::int64_t>(d - 2) * n + 2;
  if (by_size != missing) {
    throw std::logic_error("outer boundary identity violated");
  }

  BoundaryReport r;
  r.boundary = VertexSet(std::move(boundary));
  r.leaves = VertexSet(std::move(leaves));
  r.residual = VertexSet(std::move(residual));
  r.outer_size = by_size;
  // Each outer vertex has a unique neighbor in D, so outer vertices and
  // boundary edges correspond one to one.
  r.edge_boundary_size = missing;
  if (n >= 2) r.tau = excess;
  r.full = n >= 2 && r.residual.empty();
  return r;
}

std::int64_t tau_closed(const Domain& dom) {
  if (dom.size() < 2) throw Error(ErrorCode::kSingletonDomain, "tau needs |D| >= 2");
  std::int64_t boundary = 0;
  for (Vertex v = 0; v < dom.size(); ++v) boundary += dom.on_boundary(v) ? 1 : 0;
  const std::int64_t d = dom.d();
  return (d - 1) * boundary - (d - 2) * dom.size() - 2;
}

bool is_full(const Domain& dom) {
  if (dom.size() < 2) throw Error(ErrorCode::kSingletonDomain, "fullness needs |D| >= 2");
  for (Vertex v = 0; v < dom.size(); ++v) {
    if (dom.on_boundary(v) && dom.degree(v) >= 2) return false;
  }
  return true;
}

bool FullConditions::consistent() const {
  return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
}

FullConditions full_conditions(const Domain& dom) {
  if (dom.size() <= 2) {
    throw Error(ErrorCode::kDomainTooSmall, "full-domain characterization needs |D| >= 3");
  }
  const FiniteTree& t = dom.tree();
  const std::int64_t n = dom.size();
  const std::int64_t d = dom.d();
  BoundaryReport r = boundary_report(dom);
  const std::int64_t nb = r.boundary.size();

  FullConditions c;
  c.holds[0] = r.boundary == r.leaves;
  c.holds[1] = r.residual.empty();
  c.holds[2] = *r.tau == 0;
  c.holds[3] = (d - 1) * nb == (d - 2) * n + 2;
  c.holds[4] = nb == profile_value(dom.d(), n) && (n - 2) % (d - 1) == 0;

  const VertexSet inner = r.boundary.complement(t.size());
  c.holds[5] = !inner.empty() && components(t, r.boundary).size() == 1;

  // D1 = D minus dD. Its outer boundary in T_d is made of D-neighbors not in
  // D1 plus the d - deg_D(x) neighbors of x in D1 that lie outside D.
  bool rebuilds = c.holds[5];
  if (rebuilds) {
    std::vector<char> touched(t.size(), 0);
    for (Vertex x : inner) {
      if (dom.degree(x) < dom.d()) rebuilds = false;
      for (Vertex y : t.neighbors(x)) touched[y] = 1;
    }
    for (Vertex y : r.boundary) {
      if (!touched[y]) rebuilds = false;
    }
  }
  c.holds[6] = rebuilds;
  return c;
}

bool check_full_equivalences(const Domain& dom) { return full_conditions(dom).consistent(); }

std::string to_string(const TdAddress& address) {
  std::string out;
  for (std::size_t i = 0; i < address.size(); ++i) {
    if (i) out.push_back('.');
    out += std::to_string(address[i]);
  }
  return out;
}

std::vector<TdAddress> td_neighbors(const TdAddress& address, int d) {
  std::vector<TdAddress> out;
  out.reserve(d);
  if (!address.empty()) out.emplace_back(address.begin(), address.end() - 1);
  const int fanout = address.empty() ? d : d - 1;
  for (int digit = 0; digit < fanout; ++digit) {
    TdAddress child = address;
    child.push_back(digit);
    out.push_back(std::move(child));
  }
  return out;
}

std::vector<TdAddress> embed_in_Td(const Domain& dom) {
  const FiniteTree& t = dom.tree();
  const Vertex root = centroids(t).front();
  const std::vector<std::string> codes = rooted_subtree_codes(t, root);

  std::vector<TdAddress> addr(t.size());
  std::vector<char> placed(t.size(), 0);
  std::vector<Vertex> queue{root};
  placed[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    std::vector<Vertex> kids;
    for (Vertex y : t.neighbors(x)) {
      if (!placed[y]) kids.push_back(y);
    }
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      if (codes[a] != codes[b]) return codes[a] < codes[b];
      return a < b;
    });
    for (std::size_t i = 0; i < kids.size(); ++i) {
      addr[kids[i]] = addr[x];
      addr[kids[i]].push_back(static_cast<int>(i));
      placed[kids[i]] = 1;
      queue.push_back(kids[i]);
    }
  }
  return addr;
}

Domain remove_leaf(const Domain& dom, Vertex v) {
  if (v < 0 || v >= dom.size() || dom.degree(v) != 1) {
    throw Error(ErrorCode::kNotALeaf, "vertex " + std::to_string(v) + " is not a leaf");
  }
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges;
  for (const auto& [a, b] : dom.tree().edges()) {
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  }
  return Domain(FiniteTree(dom.size() - 1, std::move(edges)), dom.d());
}

}  // namespace isotree

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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "isotree/decomposition.hpp"
#include "isotree/error.hpp"
#include "isotree/stem.hpp"
#include "support.hpp"

namespace isotree {
namespace {

using testing::code_of;
using testing::three_star;
using testing::two_hub;
using testing::from_pruefer;

constexpr Color R = Color::kRed;
constexpr Color B = Color::kBlue;

StemDiagram path_stem(std::vector<Color> colors) {
  const int n = static_cast<int>(colors.size());
  return StemDiagram(FiniteTree::path(n), std::move(colors));
}

bool valid_coloring(const FiniteTree& t, const std::vector<Color>& c) {
  for (int v = 0; v < t.size(); ++v) {
    if (c[v] == R && t.degree(v) < 2) return false;
  }
  for (auto [u, v] : t.edges()) {
    if (c[u] == B && c[v] == B) return false;
  }
  return true;
}

int red_excess(const FiniteTree& t, const std::vector<Color>& c) {
  int tau = 0;
  for (int v = 0; v < t.size(); ++v) tau += c[v] == R ? t.degree(v) - 1 : 0;
  return tau;
}

std::int64_t colored_automorphisms(const StemDiagram& sd) {
  const FiniteTree& t = sd.tree();
  std::vector<int> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < t.size() && ok; ++v) ok = sd.color(v) == sd.color(perm[v]);
    for (auto [u, v] : t.edges()) {
      if (!ok) break;
      ok = t.adjacent(perm[u], perm[v]);
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(ValidateStem, Examples) {
  const StemCounts brb = validate_stem(path_stem({B, R, B}));
  EXPECT_EQ(brb.r, 1);
  EXPECT_EQ(brb.m, 2);
  EXPECT_EQ(brb.l, 0);
  EXPECT_EQ(brb.tau_star, 1);
  const StemCounts triv = validate_stem(StemDiagram::trivial());
  EXPECT_EQ(triv.r, 0);
  EXPECT_EQ(triv.m, 1);
  EXPECT_EQ(triv.l, 0);
  EXPECT_EQ(triv.tau_star, 0);
  EXPECT_NO_THROW(validate_stem(path_stem({B, R, R, B}), 3));
  const StemDiagram claw(FiniteTree::star(3), {R, B, B, B});
  EXPECT_EQ(code_of([&] { validate_stem(claw, 3); }), ErrorCode::kRedDegreeOutOfRange);
  EXPECT_NO_THROW(validate_stem(claw, 4));
}

TEST(StemDiagram, RejectsInvalidColorings) {
  EXPECT_EQ(code_of([] { path_stem({B, B}); }), ErrorCode::kBlueBlueEdge);
  EXPECT_EQ(code_of([] { path_stem({R, R, B}); }), ErrorCode::kRedLeaf);
  EXPECT_EQ(code_of([] { StemDiagram(FiniteTree::single_vertex(), {R}); }), ErrorCode::kRedLeaf);
  EXPECT_EQ(code_of([] { StemDiagram(FiniteTree::path(3), {B, R}); }), ErrorCode::kBadParameter);
}

TEST(TauStar, Examples) {
  EXPECT_EQ(tau_star(StemDiagram(FiniteTree::star(3), {R, B, B, B})), 2);
  EXPECT_EQ(tau_star(stem_of(three_star()).diagram), 2);
  EXPECT_EQ(tau_star(stem_of(two_hub()).diagram), 6);
  EXPECT_EQ(tau_star(path_stem({B, R, R, B})), 2);
  EXPECT_EQ(tau_star(StemDiagram::trivial()), 0);
}

TEST(StemIsomorphism, RespectsColors) {
  EXPECT_TRUE(is_isomorphic(path_stem({B, R, B, R, B}),
                            StemDiagram(FiniteTree(5, {{4, 3}, {3, 2}, {2, 0}, {0, 1}}),
                                        {R, B, B, R, B})));
  // Same tree, different colorings.
  EXPECT_FALSE(is_isomorphic(path_stem({B, R, R, R, B}), path_stem({B, R, B, R, B})));
}

TEST(EnumerateStems, Counts) {
  std::map<int, int> counts;
  for (const StemDiagram& sd : enumerate_stems(3)) ++counts[tau_star(sd)];
  EXPECT_EQ(counts, (std::map<int, int>{{0, 1}, {1, 1}, {2, 3}, {3, 7}}));
  const auto zero = enumerate_stems(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_trivial());
}

TEST(EnumerateStems, Invariants) {
  const auto stems = enumerate_stems(5);
  std::set<std::string> codes;
  for (const StemDiagram& sd : stems) {
    const StemCounts c = validate_stem(sd);
    ASSERT_LE(c.tau_star, 5);
    ASSERT_LE(sd.size(), 2 * c.tau_star + 1);
    ASSERT_EQ(c.m + c.l, c.tau_star + 1);
    ASSERT_EQ(c.tau_star, sd.size() - 1 - c.chi_red);
    ASSERT_TRUE(codes.insert(canonical_form(sd).bytes).second);
  }
  EXPECT_EQ(enumerate_stems(5), stems);
}

TEST(EnumerateStems, DegreeBoundFilters) {
  for (int d = 3; d <= 5; ++d) {
    std::size_t expected = 0;
    for (const StemDiagram& sd : enumerate_stems(4)) {
      bool ok = true;
      for (Vertex x : sd.red()) ok = ok && sd.tree().degree(x) <= d - 1;
      expected += ok ? 1 : 0;
    }
    const auto bounded = enumerate_stems(4, d);
    EXPECT_EQ(bounded.size(), expected);
    for (const StemDiagram& sd : bounded) EXPECT_NO_THROW(validate_stem(sd, d));
  }
}

// Orbit counting over labeled colored trees, independent of canonical codes.
TEST(EnumerateStems, LabeledOracle) {
  const int tau_max = 3;
  std::map<int, std::int64_t> labeled;  // n -> valid labeled colorings
  labeled[1] = 1;
  for (int n = 3; n <= 2 * tau_max + 1; ++n) {
    std::vector<int> seq(n - 2, 0);
    while (true) {
      const FiniteTree t = from_pruefer(seq);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Color> c(n);
        for (int v = 0; v < n; ++v) c[v] = (mask >> v) & 1 ? R : B;
        if (valid_coloring(t, c) && red_excess(t, c) <= tau_max) ++labeled[n];
      }
      int i = 0;
      while (i < n - 2 && ++seq[i] == n) seq[i++] = 0;
      if (i == n - 2) break;
    }
  }
  std::map<int, std::int64_t> orbits;
  for (const StemDiagram& sd : enumerate_stems(tau_max)) {
    std::int64_t fact = 1;
    for (int i = 2; i <= sd.size(); ++i) fact *= i;
    orbits[sd.size()] += fact / colored_automorphisms(sd);
  }
  EXPECT_EQ(orbits, labeled);
}

TEST(StemFromTree, Examples) {
  const StemDiagram p4 = stem_from_tree(FiniteTree::path(4));
  EXPECT_TRUE(is_isomorphic(p4, path_stem({B, R, R, B})));
  EXPECT_EQ(tau_star(p4), 2);
  const StemDiagram k14 = stem_from_tree(FiniteTree::star(4));
  EXPECT_TRUE(k14.is_red(0));
  EXPECT_EQ(k14.blue().size(), 4);
  EXPECT_EQ(tau_star(k14), 3);
  EXPECT_EQ(code_of([] { stem_from_tree(FiniteTree::path(2)); }), ErrorCode::kDegenerateColoring);
  EXPECT_EQ(code_of([] { stem_from_tree(FiniteTree::single_vertex()); }),
            ErrorCode::kTreeTooSmall);
}

TEST(InsertBlue, Examples) {
  const StemDiagram brbrb = insert_blue(path_stem({B, R, R, B}), {1, 2});
  EXPECT_TRUE(is_isomorphic(brbrb, path_stem({B, R, B, R, B})));
  EXPECT_EQ(brbrb.size(), 5);
  const StemDiagram longer = insert_blue(path_stem({B, R, R, R, B}), {1, 2});
  EXPECT_TRUE(is_isomorphic(longer, path_stem({B, R, B, R, R, B})));
  EXPECT_EQ(tau_star(longer), 3);
  EXPECT_EQ(code_of([] { insert_blue(path_stem({B, R, B}), {0, 1}); }),
            ErrorCode::kNotARedRedEdge);
}

TEST(InsertBlue, PreservesTauStarOnEnumeratedStems) {
  for (const StemDiagram& sd : enumerate_stems(5)) {
    const int t = tau_star(sd);
    for (auto [u, v] : sd.tree().edges()) {
      if (!(sd.is_red(u) && sd.is_red(v))) continue;
      const StemDiagram next = insert_blue(sd, {u, v});
      const StemCounts c = validate_stem(next);
      ASSERT_EQ(c.tau_star, t);
      ASSERT_EQ(c.m, validate_stem(sd).m + 1);
    }
  }
}

// Trees on tau+2 vertices, colored by leaves, closed under insert_blue.
TEST(StemPipeline, GeneratesEnumeratedStems) {
  for (int tau = 1; tau <= 5; ++tau) {
    std::set<std::string> enumerated;
    for (const StemDiagram& sd : enumerate_stems(tau)) {
      if (tau_star(sd) == tau) enumerated.insert(canonical_form(sd).bytes);
    }
    std::vector<StemDiagram> frontier;
    std::set<std::string> generated;
    for (const FiniteTree& t : enumerate_trees(tau + 2, tau + 1)) {
      frontier.push_back(stem_from_tree(t));
    }
    while (!frontier.empty()) {
      const StemDiagram sd = frontier.back();
      frontier.pop_back();
      if (!generated.insert(canonical_form(sd).bytes).second) continue;
      ASSERT_EQ(tau_star(sd), tau);
      for (auto [u, v] : sd.tree().edges()) {
        if (sd.is_red(u) && sd.is_red(v)) frontier.push_back(insert_blue(sd, {u, v}));
      }
    }
    for (const std::string& code : generated) EXPECT_TRUE(enumerated.contains(code)) << tau;
  }
}

}  // namespace
}  // namespace isotree

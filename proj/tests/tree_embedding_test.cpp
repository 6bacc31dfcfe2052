// Copyright 2026 The wqo-toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wqo/tree_embedding.hpp"

#include <algorithm>
#include <span>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "wqo/tree.hpp"

namespace wqo {
namespace {

using testing::a_only;
using testing::equality_on;
using testing::relation_from_mask;
using testing::relation_from_pairs;

const std::vector<Atom>& fg() {
  static const std::vector<Atom> v{"f", "g"};
  return v;
}

Tree N(Atom label, std::vector<Tree> children = {}) {
  return Tree(std::move(label), std::move(children));
}

// Ordered trees with n nodes over k labels: k^n * Catalan(n - 1).
std::size_t closed_form_count(std::size_t k, std::size_t n) {
  std::size_t catalan = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) catalan = catalan * 2 * (2 * i + 1) / (i + 2);
  std::size_t power = 1;
  for (std::size_t i = 0; i < n; ++i) power *= k;
  return power * catalan;
}

TEST(TreeSizeTest, Examples) {
  EXPECT_EQ(tree_size(leaf("a")), 1u);
  EXPECT_EQ(tree_size(N("f", {leaf("a"), leaf("b")})), 3u);
  EXPECT_EQ(tree_size(N("f", {N("g", {leaf("a")})})), 3u);
}

TEST(SerializeTreeTest, Format) {
  EXPECT_EQ(serialize(leaf("a")), "a");
  EXPECT_EQ(serialize(N("f", {leaf("a"), N("g", {leaf("b")})})), "f(a,g(b))");
}

TEST(TreeEmbedsTest, Examples) {
  const std::vector<Atom> labels{"a", "b", "f"};
  const auto eq = equality_on(labels);
  EXPECT_TRUE(tree_embeds(eq, leaf("a"), N("f", {leaf("a")})));
  EXPECT_FALSE(tree_embeds(eq, N("f", {leaf("a"), leaf("b")}), N("f", {leaf("a")})));
  for (const Tree& t : enumerate_trees(fg(), 4)) {
    EXPECT_TRUE(tree_embeds(equality_on(fg()), t, t));
  }
}

TEST(TreeEmbedOracleTest, Examples) {
  const auto eq = equality_on(a_only());
  const Tree a = leaf("a");
  const Tree aa = N("a", {a});
  const TreePairSet two{{a, a}, {a, aa}, {aa, aa}};
  EXPECT_EQ(tree_embed_oracle(eq, a_only(), 2), two);
  const TreePairSet one{{a, a}};
  EXPECT_EQ(tree_embed_oracle(eq, a_only(), 1), one);

  for (const auto& [s, t] : tree_embed_oracle(equality_on(fg()), fg(), 4)) {
    EXPECT_LE(tree_size(s), tree_size(t)) << serialize(s) << " " << serialize(t);
  }
}

TEST(TreeEmbedOracleTest, ExamplesAgreeWithDecisionProcedure) {
  const std::vector<Atom> labels{"a", "b", "f"};
  const auto eq = equality_on(labels);
  const auto oracle = tree_embed_oracle(eq, labels, 3);
  EXPECT_TRUE(oracle.contains({leaf("a"), N("f", {leaf("a")})}));
  EXPECT_FALSE(oracle.contains({N("f", {leaf("a"), leaf("b")}), N("f", {leaf("a")})}));
}

TEST(ProperSubtreeTest, Examples) {
  EXPECT_TRUE(is_proper_subtree(leaf("a"), N("f", {leaf("a")})));
  EXPECT_TRUE(is_proper_subtree(leaf("a"), N("f", {N("g", {leaf("a")})})));
  for (const Tree& t : enumerate_trees(fg(), 4)) {
    EXPECT_FALSE(is_proper_subtree(t, t));
  }
}

TEST(ProperSubtreeTest, EnumerationMatchesPredicate) {
  const auto universe = enumerate_trees(fg(), 4);
  for (const Tree& t : universe) {
    const auto subs = proper_subtrees(t);
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end(), TreeCanonicalLess{}));
    for (const Tree& s : universe) {
      const bool listed = std::find(subs.begin(), subs.end(), s) != subs.end();
      EXPECT_EQ(listed, is_proper_subtree(s, t));
    }
  }
}

TEST(EnumerateTreesTest, Examples) {
  const Tree a = leaf("a");
  // Same size: "a(a(a))" sorts before "a(a,a)" since '(' < ','.
  const std::vector<Tree> three{a, N("a", {a}), N("a", {N("a", {a})}), N("a", {a, a})};
  EXPECT_EQ(enumerate_trees(a_only(), 3), three);
  EXPECT_EQ(enumerate_trees(std::vector<Atom>{"a", "b"}, 1).size(), 2u);
  EXPECT_TRUE(enumerate_trees(std::vector<Atom>{}, 3).empty());
  EXPECT_TRUE(enumerate_trees(a_only(), 0).empty());
}

TEST(EnumerateTreesTest, CountsMatchClosedForm) {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<Atom> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back(std::string(1, char('a' + i)));
    for (std::size_t maxsize = 1; maxsize <= 5; ++maxsize) {
      std::size_t expected = 0;
      for (std::size_t n = 1; n <= maxsize; ++n) expected += closed_form_count(k, n);
      const auto universe = enumerate_trees(labels, maxsize);
      EXPECT_EQ(universe.size(), expected) << k << " labels, size " << maxsize;
      EXPECT_EQ(count_trees(k, maxsize, 100000), expected);
      EXPECT_TRUE(std::is_sorted(universe.begin(), universe.end(), TreeCanonicalLess{}));
      EXPECT_EQ(std::adjacent_find(universe.begin(), universe.end()), universe.end());
    }
  }
  EXPECT_EQ(enumerate_trees(fg(), 4).size(), 102u);
}

TEST(EnumerateTreesTest, GuardTrips) {
  EXPECT_THROW(enumerate_trees(fg(), 12), UniverseTooLarge);
  EXPECT_THROW(enumerate_trees(fg(), 4, 101), UniverseTooLarge);
  EXPECT_NO_THROW(enumerate_trees(fg(), 4, 102));
}

// Every reflexive base on at most two labels, all pairs of trees up to size 4.
TEST(TreeEmbedsTest, AgreesWithOracleForReflexiveBases) {
  const auto check = [](const Relation<Atom>& base, const std::vector<Atom>& labels) {
    const auto universe = enumerate_trees(labels, 4);
    const auto oracle = tree_embed_oracle(base, labels, 4);
    for (const Tree& s : universe) {
      for (const Tree& t : universe) {
        ASSERT_EQ(tree_embeds(base, s, t), oracle.contains({s, t}))
            << serialize(s) << " vs " << serialize(t);
      }
    }
  };
  check(equality_on(a_only()), a_only());
  for (std::uint64_t m : testing::reflexive_masks(2)) check(relation_from_mask(fg(), m), fg());
}

// Without reflexivity the child rule "t in ts ==> t <= f(ts)" still fires
// syntactically, while the structural recursion needs t <= t.
TEST(TreeEmbedsTest, NonReflexiveBaseDivergesFromRuleClosure) {
  const auto empty = relation_from_pairs<Atom>(a_only(), {});
  const Tree a = leaf("a");
  const Tree aa = N("a", {a});
  EXPECT_FALSE(tree_embeds(empty, a, aa));
  EXPECT_TRUE(tree_embed_oracle(empty, a_only(), 2).contains({a, aa}));
}

// The four obligations of the tree instance, exhaustively up to size 4.
TEST(TreeEmbedsTest, InstanceObligations) {
  const auto universe = enumerate_trees(fg(), 4);
  const std::span<const Tree> u(universe);
  const Relation<Tree> subtree(is_proper_subtree);
  EXPECT_TRUE(is_well_founded_on_finite(subtree, u));
  EXPECT_TRUE(is_transitive_on(subtree, u));
  for (const Tree& t : universe) {
    for (const Tree& s : proper_subtrees(t)) {
      EXPECT_NE(std::find(universe.begin(), universe.end(), s), universe.end());
      EXPECT_LT(tree_size(s), tree_size(t));
    }
  }
  for (std::uint64_t m : testing::reflexive_masks(2)) {
    const auto base = relation_from_mask(fg(), m);
    for (const Tree& s : universe) {
      for (const Tree& t : universe) {
        if (!tree_embeds(base, s, t)) continue;
        for (const Tree& v : universe) {
          if (is_proper_subtree(t, v)) {
            ASSERT_TRUE(tree_embeds(base, s, v));
          }
        }
      }
    }
  }
}

TEST(TreeEmbedsTest, EqualityBaseRespectsSize) {
  const auto eq = equality_on(fg());
  const auto universe = enumerate_trees(fg(), 4);
  for (const Tree& s : universe) {
    for (const Tree& t : universe) {
      if (tree_embeds(eq, s, t)) {
        EXPECT_LE(tree_size(s), tree_size(t));
      }
    }
  }
}

}  // namespace
}  // namespace wqo

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


#include "wqo/relations.hpp"

#include <span>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "wqo/list_embedding.hpp"

namespace wqo {
namespace {

using testing::ab;
using testing::equality_on;
using testing::relation_count;
using testing::relation_from_mask;
using testing::relation_from_pairs;
using testing::rng;

using Str = std::string;

template <typename T>
std::span<const T> S(const std::vector<T>& v) {
  return std::span<const T>(v);
}

Relation<int> less_equal_on(std::vector<int> carrier) {
  return Relation<int>([](int x, int y) { return x <= y; }, std::move(carrier));
}

TEST(ReflexiveOnTest, Examples) {
  const std::vector<Str> c = ab();
  EXPECT_TRUE(is_reflexive_on(equality_on(c), S(c)));
  const std::vector<Str> only_a{"a"};
  EXPECT_FALSE(is_reflexive_on(relation_from_pairs<Str>(only_a, {}), S(only_a)));
  EXPECT_FALSE(is_reflexive_on(relation_from_pairs<Str>(c, {{"a", "b"}}), S(c)));
  EXPECT_TRUE(is_reflexive_on(relation_from_pairs<Str>(c, {}), S(std::vector<Str>{})));
}

TEST(TransitiveOnTest, Examples) {
  const std::vector<int> nums{0, 1, 2};
  EXPECT_TRUE(is_transitive_on(less_equal_on(nums), S(nums)));
  const std::vector<Str> abc{"a", "b", "c"};
  EXPECT_FALSE(is_transitive_on(
      relation_from_pairs<Str>(abc, {{"a", "b"}, {"b", "c"}}), S(abc)));
  EXPECT_TRUE(is_transitive_on(relation_from_pairs<Str>(abc, {}), S(abc)));
}

TEST(StrictPartTest, Examples) {
  const auto lt = strict_part(less_equal_on({0, 1}));
  EXPECT_TRUE(lt(0, 1));
  EXPECT_FALSE(lt(1, 0));
  EXPECT_FALSE(lt(0, 0));
  EXPECT_EQ(lt.carrier(), std::optional<std::vector<int>>({0, 1}));

  const std::vector<Str> c = ab();
  const auto sym = relation_from_pairs<Str>(c, {{"a", "b"}, {"b", "a"}});
  EXPECT_FALSE(strict_part(sym)("a", "b"));
  EXPECT_FALSE(strict_part(relation_from_pairs<Str>(c, {}))("a", "a"));
}

TEST(StrictPartTest, IdempotentOnAllSmallRelations) {
  const std::vector<int> c{0, 1, 2};
  for (std::uint64_t m = 0; m < relation_count(3); ++m) {
    const auto rel = relation_from_mask(c, m);
    const auto once = strict_part(rel);
    const auto twice = strict_part(once);
    for (int x : c) {
      for (int y : c) {
        ASSERT_EQ(once(x, y), twice(x, y)) << "mask " << m;
        ASSERT_FALSE(once(x, y) && once(y, x));
      }
    }
  }
}

TEST(GoodPairTest, Examples) {
  const auto eq = Relation<Str>([](const Str& x, const Str& y) { return x == y; });
  const std::vector<Str> xxx{"x", "x", "x"};
  EXPECT_EQ(find_good_pair(eq, S(xxx)), (GoodPair{0, 1}));

  const auto a_below_b = relation_from_pairs<Str>(ab(), {{"a", "b"}});
  const std::vector<Str> seq{"a", "b"};
  EXPECT_EQ(find_good_pair(a_below_b, S(seq)), (GoodPair{0, 1}));

  const auto emb = Relation<ListVal>([](const ListVal& x, const ListVal& y) {
    return list_embeds(equality_on(testing::a_only()), x, y);
  });
  const std::vector<ListVal> shrinking{{"a", "a", "a"}, {"a", "a"}, {"a"}};
  EXPECT_FALSE(find_good_pair(emb, S(shrinking)).has_value());
}

TEST(IsBadTest, Examples) {
  const auto eq = Relation<int>([](int x, int y) { return x == y; });
  EXPECT_TRUE(is_bad(eq, S(std::vector<int>{})));
  EXPECT_TRUE(is_bad(eq, S(std::vector<int>{7})));
  EXPECT_FALSE(is_bad(eq, S(std::vector<int>{1, 2, 1})));

  const auto emb = Relation<ListVal>([](const ListVal& x, const ListVal& y) {
    return list_embeds(equality_on(testing::a_only()), x, y);
  });
  EXPECT_TRUE(is_bad(emb, S(std::vector<ListVal>{{"a", "a"}, {"a"}, {}})));
}

// Random relations and sequences: the reported pair is the lexicographically
// least good pair and absence coincides with badness.
TEST(GoodPairTest, LeastWitnessProperty) {
  const std::vector<int> c{0, 1, 2, 3};
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, relation_count(4) - 1);
  std::uniform_int_distribution<int> elem(0, 3);
  std::uniform_int_distribution<int> len(0, 7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rel = relation_from_mask(c, mask_dist(rng()));
    std::vector<int> seq(static_cast<std::size_t>(len(rng())));
    for (int& x : seq) x = elem(rng());

    std::optional<GoodPair> brute;
    for (std::size_t i = 0; i < seq.size() && !brute; ++i) {
      for (std::size_t j = i + 1; j < seq.size() && !brute; ++j) {
        if (rel(seq[i], seq[j])) brute = GoodPair{i, j};
      }
    }
    EXPECT_EQ(find_good_pair(rel, S(seq)), brute);
    EXPECT_EQ(is_bad(rel, S(seq)), !brute.has_value());
  }
}

TEST(WellFoundedTest, Examples) {
  const std::vector<int> nums{0, 1, 2};
  EXPECT_TRUE(is_well_founded_on_finite(strict_part(less_equal_on(nums)), S(nums)));
  const std::vector<Str> c = ab();
  const auto sym = relation_from_pairs<Str>(c, {{"a", "b"}, {"b", "a"}});
  EXPECT_FALSE(is_well_founded_on_finite(sym, S(c)));
  // A self-loop is an infinite descent.
  EXPECT_FALSE(is_well_founded_on_finite(equality_on(c), S(c)));
}

TEST(WellFoundedTest, CycleWitnessIsACycle) {
  const std::vector<int> c{0, 1, 2};
  for (std::uint64_t m = 0; m < relation_count(3); ++m) {
    const auto rel = relation_from_mask(c, m);
    const auto cycle = find_descending_cycle(rel, S(c));
    if (!cycle) continue;
    ASSERT_FALSE(cycle->empty());
    const std::size_t k = cycle->size();
    // Each element descends to its successor: rel(next, current).
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_TRUE(rel((*cycle)[(i + 1) % k], (*cycle)[i])) << "mask " << m;
    }
  }
}

TEST(AlmostFullTest, Examples) {
  const std::vector<Str> c = ab();
  EXPECT_TRUE(is_almost_full_on_finite(equality_on(c), S(c)));
  EXPECT_TRUE(is_almost_full_exhaustive(equality_on(c), S(c)));

  const std::vector<Str> only_a{"a"};
  const auto empty = relation_from_pairs<Str>(only_a, {});
  EXPECT_FALSE(is_almost_full_on_finite(empty, S(only_a)));
  EXPECT_FALSE(is_almost_full_exhaustive(empty, S(only_a)));

  const auto r = relation_from_pairs<Str>(c, {{"a", "a"}, {"b", "b"}, {"a", "b"}});
  EXPECT_TRUE(is_almost_full_on_finite(r, S(c)));
  EXPECT_TRUE(is_almost_full_exhaustive(r, S(c)));

  const std::vector<Str> none;
  EXPECT_TRUE(is_almost_full_on_finite(empty, S(none)));
  EXPECT_TRUE(is_almost_full_exhaustive(empty, S(none)));
}

// The exhaustive sequence check agrees with the reflexivity
// characterization on every relation over up to three elements.
TEST(AlmostFullTest, ExhaustiveModeAgreesOnAllSmallRelations) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<int>(i);
    for (std::uint64_t m = 0; m < relation_count(n); ++m) {
      const auto rel = relation_from_mask(c, m);
      ASSERT_EQ(is_almost_full_on_finite(rel, S(c)),
                is_almost_full_exhaustive(rel, S(c)))
          << "n=" << n << " mask=" << m;
    }
  }
}

}  // namespace
}  // namespace wqo

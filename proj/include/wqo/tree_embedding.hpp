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


// Homeomorphic (Kruskal) embedding on finite trees.
//
// tree_embeds is the two-case structural recursion:
//   s <= g(ts)  iff  s <= t' for some child t' in ts,
//               or   s = f(ss), f <= g, and ss embeds into ts as lists.
//
// tree_embed_oracle computes the least relation closed under the four
// inductive rules
//   t in ts                              ==>  t <= f(ts)
//   f <= g, ss <=* ts                    ==>  f(ss) <= g(ts)
//   s <= t, t <= u                       ==>  s <= u
//   s <= t                               ==>  f(ss @ s # ts) <= f(ss @ t # ts)
// over a bounded universe. The two agree whenever the base relation is
// reflexive on the labels; see tree_embedding_test.cpp for the non-reflexive
// divergence.

#ifndef WQO_TREE_EMBEDDING_HPP_
#define WQO_TREE_EMBEDDING_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <utility>

#include "wqo/errors.hpp"
#include "wqo/relations.hpp"
#include "wqo/tree.hpp"

namespace wqo {

using TreePair = std::pair<Tree, Tree>;

struct TreePairLess {
  bool operator()(const TreePair& a, const TreePair& b) const {
    if (a.first != b.first) return tree_canonical_less(a.first, b.first);
    return tree_canonical_less(a.second, b.second);
  }
};

using TreePairSet = std::set<TreePair, TreePairLess>;

bool tree_embeds(const Relation<Atom>& base, const Tree& s, const Tree& t);

TreePairSet tree_embed_oracle(const Relation<Atom>& base,
                              std::span<const Atom> labels,
                              std::size_t maxsize,
                              std::size_t guard = kDefaultUniverseGuard);

}  // namespace wqo

#endif  // WQO_TREE_EMBEDDING_HPP_

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


// Homeomorphic embedding on finite lists (subsequence embedding modulo a
// base relation on atoms), the strict suffix order, and bounded list
// universes.

#ifndef WQO_LIST_EMBEDDING_HPP_
#define WQO_LIST_EMBEDDING_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wqo/errors.hpp"
#include "wqo/relations.hpp"

namespace wqo {

using Atom = std::string;
using ListVal = std::vector<Atom>;
using ListPair = std::pair<ListVal, ListVal>;

// Greedy leftmost matching: each element of `xs` is matched to the first
// remaining element of `ys` it relates to. Complete for monotone matchings
// (any matching can be shifted left onto the greedy one).
template <typename T, typename Rel>
bool embeds_sequence(std::span<const T> xs, std::span<const T> ys,
                     const Rel& rel) {
  std::size_t j = 0;
  for (const T& x : xs) {
    while (j < ys.size() && !rel(x, ys[j])) ++j;
    if (j == ys.size()) return false;
    ++j;
  }
  return true;
}

bool list_embeds(const Relation<Atom>& base, const ListVal& xs,
                 const ListVal& ys);

// xs is a suffix of ys and strictly shorter.
bool is_strict_suffix(const ListVal& xs, const ListVal& ys);

// All strict suffixes of `ys`, longest first.
std::vector<ListVal> strict_suffixes(const ListVal& ys);

// Length first, then lexicographic by atom.
bool list_canonical_less(const ListVal& a, const ListVal& b);

// "[a,b,c]"
std::string serialize(const ListVal& xs);

// Number of lists of length <= maxlen over `alphabet_size` atoms, saturating
// at `cap` + 1.
std::size_t count_lists(std::size_t alphabet_size, std::size_t maxlen,
                        std::size_t cap);

// All lists over the (deduplicated) alphabet of length <= maxlen in canonical
// order. Throws UniverseTooLarge when the count exceeds `guard`.
std::vector<ListVal> enumerate_lists(std::span<const Atom> alphabet,
                                     std::size_t maxlen,
                                     std::size_t guard = kDefaultUniverseGuard);

// Least fixpoint of the three embedding rules
//   [] <= ys
//   xs <= ys            ==>  xs <= y # ys
//   x <= y, xs <= ys    ==>  x # xs <= y # ys
// over the bounded universe of lists of length <= maxlen.
std::set<ListPair> list_embed_oracle(const Relation<Atom>& base,
                                     std::span<const Atom> alphabet,
                                     std::size_t maxlen,
                                     std::size_t guard = kDefaultUniverseGuard);

}  // namespace wqo

#endif  // WQO_LIST_EMBEDDING_HPP_

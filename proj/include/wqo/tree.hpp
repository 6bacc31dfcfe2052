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


#ifndef WQO_TREE_HPP_
#define WQO_TREE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wqo/errors.hpp"
#include "wqo/list_embedding.hpp"

namespace wqo {

// Rooted, ordered, finitely branching labeled tree. Every tree has at least
// a root node; a leaf is a node with no children.
struct Tree {
  Atom label;
  std::vector<Tree> children;

  Tree() = default;
  explicit Tree(Atom l, std::vector<Tree> cs = {})
      : label(std::move(l)), children(std::move(cs)) {}

  friend bool operator==(const Tree&, const Tree&) = default;
};

inline Tree leaf(Atom label) { return Tree(std::move(label)); }

std::size_t tree_size(const Tree& t);

// "f(a,g(b))"; leaves print as their bare label.
std::string serialize(const Tree& t);

// Size first, then serialization.
bool tree_canonical_less(const Tree& a, const Tree& b);

struct TreeCanonicalLess {
  bool operator()(const Tree& a, const Tree& b) const {
    return tree_canonical_less(a, b);
  }
};

// s occurs as a node strictly below the root of t.
bool is_proper_subtree(const Tree& s, const Tree& t);

// Distinct proper subtrees of t in canonical order.
std::vector<Tree> proper_subtrees(const Tree& t);

// Labels occurring anywhere in t, sorted and deduplicated.
std::vector<Atom> labels_of(const Tree& t);

// Number of trees with at most `maxsize` nodes over `label_count` labels,
// saturating at `cap` + 1.
std::size_t count_trees(std::size_t label_count, std::size_t maxsize,
                        std::size_t cap);

// Every tree over `labels` with at most `maxsize` nodes, in canonical order.
std::vector<Tree> enumerate_trees(std::span<const Atom> labels,
                                  std::size_t maxsize,
                                  std::size_t guard = kDefaultUniverseGuard);

}  // namespace wqo

#endif  // WQO_TREE_HPP_

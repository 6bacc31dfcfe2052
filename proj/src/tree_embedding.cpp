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

#include <unordered_map>
#include <vector>

#include "wqo/list_embedding.hpp"

namespace wqo {

bool tree_embeds(const Relation<Atom>& base, const Tree& s, const Tree& t) {
  for (const Tree& child : t.children) {
    if (tree_embeds(base, s, child)) return true;
  }
  if (!base(s.label, t.label)) return false;
  return embeds_sequence(
      std::span<const Tree>(s.children), std::span<const Tree>(t.children),
      [&base](const Tree& x, const Tree& y) { return tree_embeds(base, x, y); });
}

namespace {

class OracleState {
 public:
  OracleState(const Relation<Atom>& base, std::vector<Tree> universe)
      : base_(base), universe_(std::move(universe)), n_(universe_.size()) {
    for (std::size_t i = 0; i < n_; ++i) index_.emplace(serialize(universe_[i]), i);
    children_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (const Tree& c : universe_[i].children) {
        children_[i].push_back(index_.at(serialize(c)));
      }
    }
    derived_.assign(n_ * n_, 0);
  }

  void saturate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < n_; ++s) {
        for (std::size_t t = 0; t < n_; ++t) {
          if (derived_[s * n_ + t]) continue;
          if (child_rule(s, t) || lift_rule(s, t) || transitivity_rule(s, t) ||
              context_rule(s, t)) {
            derived_[s * n_ + t] = 1;
            changed = true;
          }
        }
      }
    }
  }

  TreePairSet pairs() const {
    TreePairSet out;
    for (std::size_t s = 0; s < n_; ++s) {
      for (std::size_t t = 0; t < n_; ++t) {
        if (derived_[s * n_ + t]) out.emplace(universe_[s], universe_[t]);
      }
    }
    return out;
  }

 private:
  bool holds(std::size_t s, std::size_t t) const { return derived_[s * n_ + t]; }

  bool child_rule(std::size_t s, std::size_t t) const {
    for (std::size_t c : children_[t]) {
      if (c == s) return true;
    }
    return false;
  }

  // The three list rules applied literally to child index lists.
  bool list_rules(const std::vector<std::size_t>& xs, std::size_t i,
                  const std::vector<std::size_t>& ys, std::size_t j) const {
    if (i == xs.size()) return true;
    if (j == ys.size()) return false;
    if (list_rules(xs, i, ys, j + 1)) return true;
    return holds(xs[i], ys[j]) && list_rules(xs, i + 1, ys, j + 1);
  }

  bool lift_rule(std::size_t s, std::size_t t) const {
    return base_(universe_[s].label, universe_[t].label) &&
           list_rules(children_[s], 0, children_[t], 0);
  }

  bool transitivity_rule(std::size_t s, std::size_t t) const {
    for (std::size_t u = 0; u < n_; ++u) {
      if (holds(s, u) && holds(u, t)) return true;
    }
    return false;
  }

  bool context_rule(std::size_t s, std::size_t t) const {
    if (universe_[s].label != universe_[t].label) return false;
    const auto& cs = children_[s];
    const auto& ct = children_[t];
    if (cs.size() != ct.size()) return false;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (!holds(cs[k], ct[k])) continue;
      bool rest_equal = true;
      for (std::size_t m = 0; m < cs.size() && rest_equal; ++m) {
        if (m != k && cs[m] != ct[m]) rest_equal = false;
      }
      if (rest_equal) return true;
    }
    return false;
  }

  const Relation<Atom>& base_;
  std::vector<Tree> universe_;
  std::size_t n_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<char> derived_;
};

}  // namespace

TreePairSet tree_embed_oracle(const Relation<Atom>& base,
                              std::span<const Atom> labels,
                              std::size_t maxsize, std::size_t guard) {
  OracleState state(base, enumerate_trees(labels, maxsize, guard));
  state.saturate();
  return state.pairs();
}

}  // namespace wqo

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


#include "wqo/tree.hpp"

#include <algorithm>

namespace wqo {

std::size_t tree_size(const Tree& t) {
  std::size_t n = 1;
  for (const Tree& c : t.children) n += tree_size(c);
  return n;
}

namespace {

void serialize_into(const Tree& t, std::string& out) {
  out += t.label;
  if (t.children.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ',';
    serialize_into(t.children[i], out);
  }
  out += ')';
}

void collect_subtrees(const Tree& t, std::vector<Tree>& out) {
  for (const Tree& c : t.children) {
    out.push_back(c);
    collect_subtrees(c, out);
  }
}

void collect_labels(const Tree& t, std::vector<Atom>& out) {
  out.push_back(t.label);
  for (const Tree& c : t.children) collect_labels(c, out);
}

}  // namespace

std::string serialize(const Tree& t) {
  std::string out;
  serialize_into(t, out);
  return out;
}

bool tree_canonical_less(const Tree& a, const Tree& b) {
  const std::size_t sa = tree_size(a);
  const std::size_t sb = tree_size(b);
  if (sa != sb) return sa < sb;
  return serialize(a) < serialize(b);
}

bool is_proper_subtree(const Tree& s, const Tree& t) {
  for (const Tree& c : t.children) {
    if (c == s || is_proper_subtree(s, c)) return true;
  }
  return false;
}

std::vector<Tree> proper_subtrees(const Tree& t) {
  std::vector<Tree> out;
  collect_subtrees(t, out);
  std::sort(out.begin(), out.end(), TreeCanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Atom> labels_of(const Tree& t) {
  std::vector<Atom> out;
  collect_labels(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Saturating arithmetic for universe counting.
std::size_t sat_add(std::size_t a, std::size_t b, std::size_t cap) {
  return (a > cap || b > cap - std::min(a, cap)) ? cap + 1 : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap || b > cap / a) return cap + 1;
  return a * b;
}

}  // namespace

std::size_t count_trees(std::size_t label_count, std::size_t maxsize,
                        std::size_t cap) {
  // trees[n]: trees with exactly n nodes; forests[k]: ordered forests with k
  // nodes in total.
  std::vector<std::size_t> trees(maxsize + 1, 0);
  std::vector<std::size_t> forests(maxsize + 1, 0);
  if (maxsize == 0) return 0;
  forests[0] = 1;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= maxsize; ++n) {
    trees[n] = sat_mul(label_count, forests[n - 1], cap);
    std::size_t f = 0;
    for (std::size_t first = 1; first <= n; ++first) {
      f = sat_add(f, sat_mul(trees[first], forests[n - first], cap), cap);
    }
    forests[n] = f;
    total = sat_add(total, trees[n], cap);
  }
  return total;
}

std::vector<Tree> enumerate_trees(std::span<const Atom> labels,
                                  std::size_t maxsize, std::size_t guard) {
  std::vector<Atom> atoms(labels.begin(), labels.end());
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  const std::size_t count = count_trees(atoms.size(), maxsize, guard);
  if (count > guard) throw UniverseTooLarge(count, guard);
  if (maxsize == 0 || atoms.empty()) return {};

  std::vector<std::vector<Tree>> trees(maxsize + 1);
  std::vector<std::vector<std::vector<Tree>>> forests(maxsize + 1);
  forests[0].emplace_back();
  for (std::size_t n = 1; n <= maxsize; ++n) {
    for (const Atom& a : atoms) {
      for (const auto& forest : forests[n - 1]) trees[n].emplace_back(a, forest);
    }
    for (std::size_t first = 1; first <= n; ++first) {
      for (const Tree& head : trees[first]) {
        for (const auto& rest : forests[n - first]) {
          std::vector<Tree> forest;
          forest.reserve(rest.size() + 1);
          forest.push_back(head);
          forest.insert(forest.end(), rest.begin(), rest.end());
          forests[n].push_back(std::move(forest));
        }
      }
    }
  }

  std::vector<Tree> out;
  out.reserve(count);
  for (auto& layer : trees) {
    std::sort(layer.begin(), layer.end(), TreeCanonicalLess{});
    for (Tree& t : layer) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace wqo

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


#include "wqo/contexts.hpp"

#include <algorithm>
#include <vector>

#include "wqo/tree_embedding.hpp"

namespace wqo {

namespace {

std::vector<Atom> atom_set(std::span<const Atom> atoms) {
  std::vector<Atom> out(atoms.begin(), atoms.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<Atom>& sorted, const Atom& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

MbsContext<ListVal> list_context_with(Relation<ListVal> strong,
                                      std::span<const Atom> alphabet) {
  std::vector<Atom> atoms = atom_set(alphabet);
  return MbsContext<ListVal>{
      .vals_member =
          [atoms](const ListVal& xs) {
            return std::all_of(xs.begin(), xs.end(), [&](const Atom& a) {
              return contains(atoms, a);
            });
          },
      .strong = std::move(strong),
      .weak_lt = Relation<ListVal>(is_strict_suffix),
      .weak_predecessors = strict_suffixes,
      .rank = [](const ListVal& xs) { return xs.size(); },
      .canonical_less = list_canonical_less,
      .show = [](const ListVal& xs) { return serialize(xs); },
  };
}

}  // namespace

MbsContext<ListVal> make_list_context(const Relation<Atom>& base,
                                      std::span<const Atom> alphabet) {
  return list_context_with(
      Relation<ListVal>([base](const ListVal& xs, const ListVal& ys) {
        return list_embeds(base, xs, ys);
      }),
      alphabet);
}

MbsContext<ListVal> make_broken_list_context(std::span<const Atom> alphabet) {
  return list_context_with(
      Relation<ListVal>(
          [](const ListVal& xs, const ListVal& ys) { return xs == ys; }),
      alphabet);
}

MbsContext<Tree> make_tree_context(const Relation<Atom>& base,
                                   std::span<const Atom> labels) {
  std::vector<Atom> atoms = atom_set(labels);
  return MbsContext<Tree>{
      .vals_member =
          [atoms](const Tree& t) {
            const std::vector<Atom> used = labels_of(t);
            return std::all_of(used.begin(), used.end(), [&](const Atom& a) {
              return contains(atoms, a);
            });
          },
      .strong = Relation<Tree>([base](const Tree& s, const Tree& t) {
        return tree_embeds(base, s, t);
      }),
      .weak_lt = Relation<Tree>(is_proper_subtree),
      .weak_predecessors = proper_subtrees,
      .rank = tree_size,
      .canonical_less = tree_canonical_less,
      .show = [](const Tree& t) { return serialize(t); },
  };
}

}  // namespace wqo

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


#include "wqo/list_embedding.hpp"

#include <algorithm>
#include <map>

namespace wqo {

bool list_embeds(const Relation<Atom>& base, const ListVal& xs,
                 const ListVal& ys) {
  return embeds_sequence(std::span<const Atom>(xs), std::span<const Atom>(ys),
                         base);
}

bool is_strict_suffix(const ListVal& xs, const ListVal& ys) {
  if (xs.size() >= ys.size()) return false;
  return std::equal(xs.rbegin(), xs.rend(), ys.rbegin());
}

std::vector<ListVal> strict_suffixes(const ListVal& ys) {
  std::vector<ListVal> out;
  for (std::size_t drop = 1; drop <= ys.size(); ++drop) {
    out.emplace_back(ys.begin() + static_cast<std::ptrdiff_t>(drop), ys.end());
  }
  return out;
}

bool list_canonical_less(const ListVal& a, const ListVal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string serialize(const ListVal& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += xs[i];
  }
  out += ']';
  return out;
}

std::size_t count_lists(std::size_t alphabet_size, std::size_t maxlen,
                        std::size_t cap) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= maxlen; ++len) {
    total += layer;
    if (total > cap) return cap + 1;
    if (len == maxlen || alphabet_size == 0) break;
    if (layer > cap / alphabet_size) return cap + 1;
    layer *= alphabet_size;
  }
  return total;
}

namespace {

std::vector<Atom> sorted_alphabet(std::span<const Atom> alphabet) {
  std::vector<Atom> atoms(alphabet.begin(), alphabet.end());
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

}  // namespace

std::vector<ListVal> enumerate_lists(std::span<const Atom> alphabet,
                                     std::size_t maxlen, std::size_t guard) {
  const std::vector<Atom> atoms = sorted_alphabet(alphabet);
  const std::size_t count = count_lists(atoms.size(), maxlen, guard);
  if (count > guard) throw UniverseTooLarge(count, guard);

  std::vector<ListVal> out{ListVal{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= maxlen && !atoms.empty(); ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const Atom& a : atoms) {
        ListVal next = out[i];
        next.push_back(a);
        out.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  // Appending atoms to a lexicographically sorted layer keeps it sorted.
  return out;
}

std::set<ListPair> list_embed_oracle(const Relation<Atom>& base,
                                     std::span<const Atom> alphabet,
                                     std::size_t maxlen, std::size_t guard) {
  const std::vector<ListVal> universe = enumerate_lists(alphabet, maxlen, guard);
  const std::size_t n = universe.size();
  std::map<ListVal, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(universe[i], i);

  auto tail = [&](std::size_t i) {
    const ListVal& l = universe[i];
    return index.at(ListVal(l.begin() + 1, l.end()));
  };

  std::vector<char> derived(n * n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        char& cell = derived[x * n + y];
        if (cell) continue;
        const ListVal& xs = universe[x];
        const ListVal& ys = universe[y];
        bool fires = xs.empty();
        if (!fires && !ys.empty()) {
          const std::size_t ys_tail = tail(y);
          fires = derived[x * n + ys_tail] ||
                  (base(xs.front(), ys.front()) &&
                   derived[tail(x) * n + ys_tail]);
        }
        if (fires) {
          cell = 1;
          changed = true;
        }
      }
    }
  }

  std::set<ListPair> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (derived[x * n + y]) out.emplace(universe[x], universe[y]);
    }
  }
  return out;
}

}  // namespace wqo

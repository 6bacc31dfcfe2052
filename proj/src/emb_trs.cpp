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


#include "wqo/emb_trs.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "wqo/tree_embedding.hpp"

namespace wqo {

namespace {

void root_steps(const Relation<Atom>& base, std::span<const Atom> labels,
                const Tree& t, std::vector<Tree>& out) {
  for (const Tree& c : t.children) out.push_back(c);

  const std::size_t k = t.children.size();
  // FIXME: 2^k subsets per node; fine for desk-scale trees only.
  const std::size_t full = (std::size_t{1} << k) - 1;
  for (const Atom& g : labels) {
    if (!base(g, t.label)) continue;
    for (std::size_t mask = 0; mask <= full; ++mask) {
      if (g == t.label && mask == full) continue;
      std::vector<Tree> kept;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (std::size_t{1} << i)) kept.push_back(t.children[i]);
      }
      out.emplace_back(g, std::move(kept));
    }
  }
}

void all_steps(const Relation<Atom>& base, std::span<const Atom> labels,
               const Tree& t, std::vector<Tree>& out) {
  root_steps(base, labels, t, out);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    std::vector<Tree> inner;
    all_steps(base, labels, t.children[i], inner);
    for (Tree& r : inner) {
      Tree copy = t;
      copy.children[i] = std::move(r);
      out.push_back(std::move(copy));
    }
  }
}

std::vector<Atom> step_labels(const Relation<Atom>& base, const Tree& t) {
  if (base.carrier()) {
    std::vector<Atom> ls = *base.carrier();
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
  }
  return labels_of(t);
}

std::vector<Tree> one_step_with(const Relation<Atom>& base,
                                std::span<const Atom> labels, const Tree& t) {
  std::vector<Tree> out;
  all_steps(base, labels, t, out);
  std::sort(out.begin(), out.end(), TreeCanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Breadth-first closure; stops early once `target` is seen (if given).
std::vector<Tree> reach(const Relation<Atom>& base, const Tree& t,
                        const Tree* target, bool* found) {
  const std::vector<Atom> labels = step_labels(base, t);
  std::unordered_set<std::string> visited;
  std::vector<Tree> reached;
  std::deque<Tree> frontier{t};
  while (!frontier.empty()) {
    Tree current = std::move(frontier.front());
    frontier.pop_front();
    for (Tree& next : one_step_with(base, labels, current)) {
      if (!visited.insert(serialize(next)).second) continue;
      if (target != nullptr && next == *target) {
        *found = true;
        return reached;
      }
      reached.push_back(next);
      frontier.push_back(std::move(next));
    }
  }
  return reached;
}

}  // namespace

std::vector<Tree> emb_one_step(const Relation<Atom>& base, const Tree& t) {
  return one_step_with(base, step_labels(base, t), t);
}

std::vector<Tree> emb_reachable(const Relation<Atom>& base, const Tree& t) {
  std::vector<Tree> out = reach(base, t, nullptr, nullptr);
  std::sort(out.begin(), out.end(), TreeCanonicalLess{});
  return out;
}

bool emb_reaches(const Relation<Atom>& base, const Tree& t, const Tree& s) {
  bool found = false;
  reach(base, t, &s, &found);
  return found;
}

std::string_view to_string(DiagonalConvention c) {
  switch (c) {
    case DiagonalConvention::kIdentityCountsAsReachable:
      return "reflexive base: s == t counts as reachable";
    case DiagonalConvention::kStrictClosure:
      return "strict closure";
  }
  return "";
}

std::string_view to_string(DisagreementKind k) {
  switch (k) {
    case DisagreementKind::kEmbedsWithoutReaching:
      return "embeds but not reachable";
    case DisagreementKind::kReachesWithoutEmbedding:
      return "reachable but does not embed";
  }
  return "";
}

EquivalenceReport verify_emb_equivalence(const Relation<Atom>& base,
                                         std::span<const Atom> labels,
                                         std::size_t maxsize,
                                         std::size_t guard) {
  const std::vector<Tree> universe = enumerate_trees(labels, maxsize, guard);
  std::vector<Atom> label_set(labels.begin(), labels.end());
  const Relation<Atom> rel =
      base.carrier() ? base : base.with_carrier(label_set);

  EquivalenceReport report;
  report.convention = is_reflexive_on(rel, std::span<const Atom>(label_set))
                          ? DiagonalConvention::kIdentityCountsAsReachable
                          : DiagonalConvention::kStrictClosure;

  std::vector<std::unordered_set<std::string>> reachable(universe.size());
  for (std::size_t t = 0; t < universe.size(); ++t) {
    for (const Tree& r : emb_reachable(rel, universe[t])) {
      reachable[t].insert(serialize(r));
    }
  }

  for (const Tree& s : universe) {
    const std::string key = serialize(s);
    for (std::size_t t = 0; t < universe.size(); ++t) {
      ++report.pairs_checked;
      const bool embeds = tree_embeds(rel, s, universe[t]);
      bool reaches = reachable[t].contains(key);
      if (report.convention == DiagonalConvention::kIdentityCountsAsReachable &&
          s == universe[t]) {
        reaches = true;
      }
      if (embeds != reaches && report.agrees) {
        report.agrees = false;
        report.first_counterexample = EmbDisagreement{
            s, universe[t],
            embeds ? DisagreementKind::kEmbedsWithoutReaching
                   : DisagreementKind::kReachesWithoutEmbedding};
      }
    }
  }
  return report;
}

}  // namespace wqo

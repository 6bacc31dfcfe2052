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


// The embedding rewrite system on ground trees:
//   f(ts) -> t       if t is one of ts
//   f(ts) -> g(ss)   if g <= f and ss is ts with zero or more children deleted
// closed under contexts, and a brute-force check that s embeds into t exactly
// when t rewrites to s in one or more steps.

#ifndef WQO_EMB_TRS_HPP_
#define WQO_EMB_TRS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wqo/errors.hpp"
#include "wqo/relations.hpp"
#include "wqo/tree.hpp"

namespace wqo {

// All one-step reducts of t, canonical order, without duplicates. The
// identity instance of the relabeling rule (same label, no child deleted) is
// not a step. Replacement labels g are drawn from base.carrier() when
// present, otherwise from the labels occurring in t.
std::vector<Tree> emb_one_step(const Relation<Atom>& base, const Tree& t);

// Every tree reachable from t in one or more steps, canonical order.
std::vector<Tree> emb_reachable(const Relation<Atom>& base, const Tree& t);

// t ->+ s. Breadth-first with a visited set; steps never add nodes, so the
// search space is finite.
bool emb_reaches(const Relation<Atom>& base, const Tree& t, const Tree& s);

enum class DiagonalConvention {
  // Base reflexive on the labels: embeds(s, t) is compared against
  // (t ->+ s or s == t).
  kIdentityCountsAsReachable,
  // Base not reflexive: embeds(s, t) is compared against t ->+ s alone.
  kStrictClosure,
};

std::string_view to_string(DiagonalConvention c);

enum class DisagreementKind {
  kEmbedsWithoutReaching,
  kReachesWithoutEmbedding,
};

std::string_view to_string(DisagreementKind k);

struct EmbDisagreement {
  Tree embedded;  // s
  Tree host;      // t
  DisagreementKind kind;
};

struct EquivalenceReport {
  std::size_t pairs_checked = 0;
  bool agrees = true;
  std::optional<EmbDisagreement> first_counterexample;
  DiagonalConvention convention = DiagonalConvention::kStrictClosure;
};

// Checks tree_embeds(base, s, t) against reachability for every ordered pair
// of trees over `labels` with at most `maxsize` nodes. Pairs are visited with
// s major, t minor, both in canonical order.
EquivalenceReport verify_emb_equivalence(
    const Relation<Atom>& base, std::span<const Atom> labels,
    std::size_t maxsize, std::size_t guard = kDefaultUniverseGuard);

}  // namespace wqo

#endif  // WQO_EMB_TRS_HPP_

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


// Ready-made minimal-bad-sequence contexts for lists (embedding / strict
// suffix) and trees (embedding / proper subtree).

#ifndef WQO_CONTEXTS_HPP_
#define WQO_CONTEXTS_HPP_

#include <span>

#include "wqo/list_embedding.hpp"
#include "wqo/mbs.hpp"
#include "wqo/relations.hpp"
#include "wqo/tree.hpp"

namespace wqo {

// Universe: lists over `alphabet`. strong: list_embeds(base). weak_lt: strict
// suffix. rank: length.
MbsContext<ListVal> make_list_context(const Relation<Atom>& base,
                                      std::span<const Atom> alphabet);

// Like the list context but with syntactic equality as `strong`. Violates
// right-compatibility; used to show the axiom checker catches it.
MbsContext<ListVal> make_broken_list_context(std::span<const Atom> alphabet);

// Universe: trees over `labels`. strong: tree_embeds(base). weak_lt: proper
// subtree. rank: size.
MbsContext<Tree> make_tree_context(const Relation<Atom>& base,
                                   std::span<const Atom> labels);

}  // namespace wqo

#endif  // WQO_CONTEXTS_HPP_

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


// Text formats and the command-line driver.
//
//   tree     := label | label "(" ")" | label "(" tree ("," tree)* ")"
//   list     := "[" (label ("," label)*)? "]"
//   label    := [A-Za-z0-9_]+
//   relation := one "x <= y" per line, optional "alphabet: a b c" lines,
//               '#' comments and blank lines ignored.

#ifndef WQO_CLI_HPP_
#define WQO_CLI_HPP_

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wqo/list_embedding.hpp"
#include "wqo/relations.hpp"
#include "wqo/tree.hpp"

namespace wqo::cli {

struct BaseRelationSpec {
  std::set<std::pair<Atom, Atom>> pairs;
  std::set<Atom> labels;
  bool reflexive_closure = false;
};

// Throws ParseError carrying a byte offset.
Tree parse_tree(std::string_view text);
ListVal parse_list(std::string_view text);

// Throws ParseError carrying a 1-based line number. With
// `reflexive_closure`, every (l, l) over the collected labels is added.
BaseRelationSpec parse_relation(std::string_view text,
                                bool reflexive_closure = false);

// The relation as a predicate; its carrier is the spec's label set.
Relation<Atom> to_relation(const BaseRelationSpec& spec);

enum class SeqKind { kAtom, kList, kTree };

// One object per non-blank, non-comment line. Throws ParseError carrying a
// 1-based line number.
std::vector<Atom> parse_atom_sequence(std::string_view text);
std::vector<ListVal> parse_list_sequence(std::string_view text);
std::vector<Tree> parse_tree_sequence(std::string_view text);

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kError = 2;

// Runs one invocation; `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace wqo::cli

#endif  // WQO_CLI_HPP_

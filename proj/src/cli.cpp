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


#include "wqo/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "wqo/errors.hpp"

namespace wqo::cli {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Tree tree() {
    skip_ws();
    Atom label = this->label();
    skip_ws();
    if (!consume('(')) return Tree(std::move(label));
    std::vector<Tree> children;
    skip_ws();
    if (consume(')')) return Tree(std::move(label));
    for (;;) {
      skip_ws();
      children.push_back(tree());
      skip_ws();
      if (consume(',')) continue;
      if (consume(')')) break;
      fail("expected ',' or ')'");
    }
    return Tree(std::move(label), std::move(children));
  }

  ListVal list() {
    skip_ws();
    if (!consume('[')) fail("expected '['");
    ListVal out;
    skip_ws();
    if (consume(']')) return out;
    for (;;) {
      skip_ws();
      out.push_back(label());
      skip_ws();
      if (consume(',')) continue;
      if (consume(']')) break;
      fail("expected ',' or ']'");
    }
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  Atom label() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected label");
    return Atom(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_label_char);
}

// Calls `fn(line, line_number)` for every non-blank, non-comment line.
void for_each_content_line(
    std::string_view text,
    const std::function<void(std::string_view, std::size_t)>& fn) {
  std::size_t line_no = 0;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (!line.empty() && line.front() != '#') fn(line, line_no);
    if (text.empty()) break;
  }
}

template <typename T, typename Parse>
std::vector<T> parse_lines(std::string_view text, Parse parse) {
  std::vector<T> out;
  for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
    try {
      out.push_back(parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       line_no);
    }
  });
  return out;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  TermParser p(text);
  Tree t = p.tree();
  p.finish();
  return t;
}

ListVal parse_list(std::string_view text) {
  TermParser p(text);
  ListVal xs = p.list();
  p.finish();
  return xs;
}

BaseRelationSpec parse_relation(std::string_view text, bool reflexive_closure) {
  BaseRelationSpec spec;
  spec.reflexive_closure = reflexive_closure;
  for_each_content_line(text, [&](std::string_view line, std::size_t line_no) {
    auto fail = [line_no](const std::string& what) {
      throw ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
    };
    constexpr std::string_view kAlphabet = "alphabet:";
    if (line.starts_with(kAlphabet)) {
      std::istringstream words{std::string(line.substr(kAlphabet.size()))};
      std::string word;
      while (words >> word) {
        if (!is_label(word)) fail("invalid label '" + word + "'");
        spec.labels.insert(word);
      }
      return;
    }
    const std::size_t op = line.find("<=");
    if (op == std::string_view::npos) fail("expected 'x <= y'");
    const std::string_view lhs = trim(line.substr(0, op));
    const std::string_view rhs = trim(line.substr(op + 2));
    if (!is_label(lhs) || !is_label(rhs)) fail("expected 'x <= y'");
    spec.pairs.emplace(Atom(lhs), Atom(rhs));
    spec.labels.emplace(lhs);
    spec.labels.emplace(rhs);
  });
  if (reflexive_closure) {
    for (const Atom& l : spec.labels) spec.pairs.emplace(l, l);
  }
  return spec;
}

Relation<Atom> to_relation(const BaseRelationSpec& spec) {
  auto pairs = spec.pairs;
  return Relation<Atom>(
      [pairs = std::move(pairs)](const Atom& x, const Atom& y) {
        return pairs.contains({x, y});
      },
      std::vector<Atom>(spec.labels.begin(), spec.labels.end()));
}

std::vector<Atom> parse_atom_sequence(std::string_view text) {
  return parse_lines<Atom>(text, [](std::string_view line) {
    if (!is_label(line)) throw ParseError("expected label", 0);
    return Atom(line);
  });
}

std::vector<ListVal> parse_list_sequence(std::string_view text) {
  return parse_lines<ListVal>(text, parse_list);
}

std::vector<Tree> parse_tree_sequence(std::string_view text) {
  return parse_lines<Tree>(text, parse_tree);
}

}  // namespace wqo::cli

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


#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "wqo/cli.hpp"
#include "wqo/contexts.hpp"
#include "wqo/emb_trs.hpp"
#include "wqo/errors.hpp"
#include "wqo/mbs.hpp"
#include "wqo/tree_embedding.hpp"

namespace wqo::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOptions {
  std::string rel_file;
  bool refl = false;
  std::optional<std::size_t> guard;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--rel", opts.rel_file, "base relation file")->required();
  sub->add_flag("--refl", opts.refl, "add all diagonal pairs");
  sub->add_option("--guard", opts.guard, "universe size bound");
}

class Session {
 public:
  Session(const CommonOptions& opts, std::ostream& out)
      : spec_(parse_relation(read_file(opts.rel_file), opts.refl)),
        base_(to_relation(spec_)),
        labels_(spec_.labels.begin(), spec_.labels.end()),
        universe_guard_(opts.guard.value_or(kDefaultUniverseGuard)),
        closure_guard_(opts.guard.value_or(kDefaultClosureGuard)),
        out_(out) {}

  void require_label(const Atom& a) const {
    if (!spec_.labels.contains(a)) {
      throw UsageError("label '" + a + "' is not declared by the relation");
    }
  }
  void require_labels(const ListVal& xs) const {
    for (const Atom& a : xs) require_label(a);
  }
  void require_labels(const Tree& t) const {
    for (const Atom& a : labels_of(t)) require_label(a);
  }

  const Relation<Atom>& base() const { return base_; }
  const std::vector<Atom>& labels() const { return labels_; }
  std::size_t universe_guard() const { return universe_guard_; }
  std::size_t closure_guard() const { return closure_guard_; }
  std::ostream& out() const { return out_; }

 private:
  BaseRelationSpec spec_;
  Relation<Atom> base_;
  std::vector<Atom> labels_;
  std::size_t universe_guard_;
  std::size_t closure_guard_;
  std::ostream& out_;
};

int print_bool(std::ostream& out, bool holds) {
  out << (holds ? "true" : "false") << '\n';
  return holds ? kHolds : kFails;
}

template <typename T>
void print_sequence(std::ostream& out, const std::vector<T>& seq) {
  for (const T& x : seq) out << serialize(x) << '\n';
}

template <typename T>
int good_pair(const Session& s, const Relation<T>& rel,
              const std::vector<T>& seq) {
  if (auto p = find_good_pair(rel, std::span<const T>(seq))) {
    s.out() << p->first << ' ' << p->second << '\n';
    return kHolds;
  }
  s.out() << "none\n";
  return kFails;
}

template <typename T>
int minimize(const Session& s, const MbsContext<T>& ctx,
             const std::vector<T>& seq) {
  if (seq.empty()) throw UsageError("empty sequence");
  print_sequence(s.out(),
                 minimize_bad_sequence(ctx, std::span<const T>(seq),
                                       s.closure_guard()));
  return kHolds;
}

template <typename T>
void print_verdict(std::ostream& out, std::string_view name,
                   const MbsContext<T>& ctx, const AxiomVerdict<T>& v) {
  out << name << ": ";
  if (v.pass()) {
    out << "pass\n";
    return;
  }
  out << "fail (";
  for (std::size_t i = 0; i < v.witness->size(); ++i) {
    if (i > 0) out << ", ";
    out << ctx.show((*v.witness)[i]);
  }
  out << ")\n";
}

template <typename T>
int axioms(const Session& s, const MbsContext<T>& ctx,
           const std::vector<T>& universe) {
  const AxiomReport<T> r = check_locale_axioms(ctx, std::span<const T>(universe));
  print_verdict(s.out(), "right-compatibility", ctx, r.right_compatibility);
  print_verdict(s.out(), "well-foundedness", ctx, r.well_foundedness);
  print_verdict(s.out(), "transitivity", ctx, r.transitivity);
  print_verdict(s.out(), "reflects-membership", ctx, r.reflects_membership);
  print_verdict(s.out(), "predecessor-consistency", ctx,
                r.predecessor_consistency);
  return r.all_pass() ? kHolds : kFails;
}

template <typename T>
int max_bad(const Session& s, const MbsContext<T>& ctx,
            const std::vector<T>& candidates) {
  print_sequence(s.out(),
                 longest_bad_sequence(ctx, std::span<const T>(candidates)));
  return kHolds;
}

std::vector<Atom> split_labels(const std::string& text) {
  std::vector<Atom> out;
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    out.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Well-quasi-order toolkit: embeddings and minimal bad sequences",
               "wqo"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string first, second, seq_file, kind, labels;
  std::size_t maxsize = 0;
  bool broken = false;

  auto* embed_list = app.add_subcommand("embed-list", "list embedding test");
  add_common(embed_list, common);
  embed_list->add_option("xs", first)->required();
  embed_list->add_option("ys", second)->required();

  auto* embed_tree = app.add_subcommand("embed-tree", "tree embedding test");
  add_common(embed_tree, common);
  embed_tree->add_option("s", first)->required();
  embed_tree->add_option("t", second)->required();

  auto* good = app.add_subcommand("good-pair", "first good pair of a sequence");
  add_common(good, common);
  good->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"list", "tree", "atom"}));
  good->add_option("--seq", seq_file)->required();

  auto* min = app.add_subcommand("minimize", "minimal bad sequence");
  add_common(min, common);
  min->add_option("--kind", kind)->required()->check(CLI::IsMember({"list", "tree"}));
  min->add_option("--seq", seq_file)->required();

  auto* emb = app.add_subcommand("emb-check",
                                 "embedding vs. rewrite reachability");
  add_common(emb, common);
  emb->add_option("--labels", labels)->required();
  emb->add_option("--maxsize", maxsize)->required();

  auto* ax = app.add_subcommand("axioms", "check context axioms");
  add_common(ax, common);
  ax->add_option("--kind", kind)->required()->check(CLI::IsMember({"list", "tree"}));
  ax->add_option("--maxsize", maxsize)->required();
  ax->add_flag("--break", broken, "use equality as the goodness relation");

  auto* maxbad = app.add_subcommand("max-bad", "longest bad sequence");
  add_common(maxbad, common);
  maxbad->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"list", "tree"}));
  maxbad->add_option("--maxsize", maxsize)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kHolds;
    }
    err << "wqo: " << e.what() << '\n';
    return kError;
  }

  try {
    const Session s(common, out);
    if (embed_list->parsed()) {
      const ListVal xs = parse_list(first);
      const ListVal ys = parse_list(second);
      s.require_labels(xs);
      s.require_labels(ys);
      return print_bool(out, list_embeds(s.base(), xs, ys));
    }
    if (embed_tree->parsed()) {
      const Tree a = parse_tree(first);
      const Tree b = parse_tree(second);
      s.require_labels(a);
      s.require_labels(b);
      return print_bool(out, tree_embeds(s.base(), a, b));
    }
    if (good->parsed()) {
      const std::string text = read_file(seq_file);
      if (kind == "atom") {
        const auto seq = parse_atom_sequence(text);
        for (const Atom& a : seq) s.require_label(a);
        return good_pair(s, s.base(), seq);
      }
      if (kind == "list") {
        const auto seq = parse_list_sequence(text);
        for (const auto& x : seq) s.require_labels(x);
        return good_pair(s, make_list_context(s.base(), s.labels()).strong, seq);
      }
      const auto seq = parse_tree_sequence(text);
      for (const auto& x : seq) s.require_labels(x);
      return good_pair(s, make_tree_context(s.base(), s.labels()).strong, seq);
    }
    if (min->parsed()) {
      const std::string text = read_file(seq_file);
      if (kind == "list") {
        const auto seq = parse_list_sequence(text);
        for (const auto& x : seq) s.require_labels(x);
        return minimize(s, make_list_context(s.base(), s.labels()), seq);
      }
      const auto seq = parse_tree_sequence(text);
      for (const auto& x : seq) s.require_labels(x);
      return minimize(s, make_tree_context(s.base(), s.labels()), seq);
    }
    if (emb->parsed()) {
      const std::vector<Atom> ls = split_labels(labels);
      for (const Atom& a : ls) s.require_label(a);
      const EquivalenceReport r = verify_emb_equivalence(
          s.base().with_carrier(ls), ls, maxsize, s.universe_guard());
      out << "agrees: " << (r.agrees ? "true" : "false") << " ("
          << r.pairs_checked << " pairs)\n";
      if (r.first_counterexample) {
        out << "counterexample: " << serialize(r.first_counterexample->embedded)
            << " in " << serialize(r.first_counterexample->host) << " ("
            << to_string(r.first_counterexample->kind) << ")\n";
      }
      return r.agrees ? kHolds : kFails;
    }
    if (ax->parsed()) {
      if (kind == "list") {
        const auto universe = enumerate_lists(s.labels(), maxsize, s.universe_guard());
        return axioms(s,
                      broken ? make_broken_list_context(s.labels())
                             : make_list_context(s.base(), s.labels()),
                      universe);
      }
      if (broken) throw UsageError("--break applies to --kind list only");
      const auto universe = enumerate_trees(s.labels(), maxsize, s.universe_guard());
      return axioms(s, make_tree_context(s.base(), s.labels()), universe);
    }
    if (maxbad->parsed()) {
      if (kind == "list") {
        const auto universe = enumerate_lists(s.labels(), maxsize, s.universe_guard());
        return max_bad(s, make_list_context(s.base(), s.labels()), universe);
      }
      const auto universe = enumerate_trees(s.labels(), maxsize, s.universe_guard());
      return max_bad(s, make_tree_context(s.base(), s.labels()), universe);
    }
  } catch (const std::exception& e) {
    err << "wqo: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace wqo::cli

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


// Minimal bad sequences at finite horizon.
//
// A context bundles a universe membership test, a goodness relation `strong`
// and a strict minimality order `weak_lt`. The context is admissible when
// (a) strong(x, y) and weak_lt(y, z) imply strong(x, z),
// (b) weak_lt is well-founded (certified by a strictly decreasing rank),
// (c) weak_lt is transitive,
// (d) weak_lt(x, y) and y in the universe imply x in the universe.
//
// Sequences have a fixed length L. A sequence f is minimal at n when no g
// agreeing with f below n, with weak_lt(g[n], f[n]) and every g[i] (i >= n)
// drawn from the candidate space, is bad. The candidate space used by the
// minimizer is the weak closure of all elements of the input.

#ifndef WQO_MBS_HPP_
#define WQO_MBS_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wqo/errors.hpp"
#include "wqo/relations.hpp"

namespace wqo {

template <typename T>
struct MbsContext {
  std::function<bool(const T&)> vals_member;
  Relation<T> strong;
  // Strict; the reflexive closure is derived where needed.
  Relation<T> weak_lt;
  // Exactly the objects y with weak_lt(y, x).
  std::function<std::vector<T>(const T&)> weak_predecessors;
  // Must strictly decrease along weak_lt.
  std::function<std::size_t(const T&)> rank;
  // Total order used for every tie-break and for report ordering.
  std::function<bool(const T&, const T&)> canonical_less;
  std::function<std::string(const T&)> show;

  bool weak_le(const T& x, const T& y) const { return x == y || weak_lt(x, y); }
};

// Pass iff `witness` is empty.
template <typename T>
struct AxiomVerdict {
  std::optional<std::vector<T>> witness;

  bool pass() const { return !witness.has_value(); }
};

template <typename T>
struct AxiomReport {
  // (x, y, z) with strong(x, y), weak_lt(y, z), not strong(x, z).
  AxiomVerdict<T> right_compatibility;
  // A descending cycle, or a pair (y, x) with weak_lt(y, x) and
  // rank(y) >= rank(x).
  AxiomVerdict<T> well_foundedness;
  // (x, y, z) with weak_lt(x, y), weak_lt(y, z), not weak_lt(x, z).
  AxiomVerdict<T> transitivity;
  // (x, y) with weak_lt(x, y), y a member, x not a member.
  AxiomVerdict<T> reflects_membership;
  // (y, x) on which weak_predecessors(x) and weak_lt disagree.
  AxiomVerdict<T> predecessor_consistency;

  bool all_pass() const {
    return right_compatibility.pass() && well_foundedness.pass() &&
           transitivity.pass() && reflects_membership.pass() &&
           predecessor_consistency.pass();
  }
};

// Sorted by the context's canonical order, duplicates removed.
template <typename T>
std::vector<T> canonicalize(const MbsContext<T>& ctx, std::vector<T> items) {
  std::sort(items.begin(), items.end(), ctx.canonical_less);
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

template <typename T>
std::vector<std::vector<T>> right_compatibility_violations(
    const MbsContext<T>& ctx, std::span<const T> universe) {
  const std::vector<T> u =
      canonicalize(ctx, std::vector<T>(universe.begin(), universe.end()));
  std::vector<std::vector<T>> out;
  for (const T& x : u) {
    for (const T& y : u) {
      if (!ctx.strong(x, y)) continue;
      for (const T& z : u) {
        if (ctx.weak_lt(y, z) && !ctx.strong(x, z)) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

namespace detail {

template <typename T>
std::optional<std::vector<T>> first_right_compatibility_violation(
    const MbsContext<T>& ctx, std::span<const T> u) {
  for (const T& x : u) {
    for (const T& y : u) {
      if (!ctx.strong(x, y)) continue;
      for (const T& z : u) {
        if (ctx.weak_lt(y, z) && !ctx.strong(x, z)) return std::vector<T>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

template <typename T>
std::optional<std::vector<T>> first_well_foundedness_violation(
    const MbsContext<T>& ctx, std::span<const T> u) {
  if (auto cycle = find_descending_cycle(ctx.weak_lt, u)) return cycle;
  for (const T& x : u) {
    for (const T& y : u) {
      if (ctx.weak_lt(y, x) && ctx.rank(y) >= ctx.rank(x)) {
        return std::vector<T>{y, x};
      }
    }
  }
  return std::nullopt;
}

template <typename T>
std::optional<std::vector<T>> first_transitivity_violation(
    const MbsContext<T>& ctx, std::span<const T> u) {
  for (const T& x : u) {
    for (const T& y : u) {
      if (!ctx.weak_lt(x, y)) continue;
      for (const T& z : u) {
        if (ctx.weak_lt(y, z) && !ctx.weak_lt(x, z)) return std::vector<T>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

// Checks universe pairs and every enumerated predecessor of a member.
template <typename T>
std::optional<std::vector<T>> first_reflects_violation(const MbsContext<T>& ctx,
                                                       std::span<const T> u) {
  for (const T& y : u) {
    if (!ctx.vals_member(y)) continue;
    std::vector<T> below = ctx.weak_predecessors(y);
    for (const T& x : u) {
      if (ctx.weak_lt(x, y)) below.push_back(x);
    }
    for (const T& x : canonicalize(ctx, std::move(below))) {
      if (!ctx.vals_member(x)) return std::vector<T>{x, y};
    }
  }
  return std::nullopt;
}

template <typename T>
std::optional<std::vector<T>> first_predecessor_mismatch(
    const MbsContext<T>& ctx, std::span<const T> u) {
  for (const T& x : u) {
    const std::vector<T> preds = canonicalize(ctx, ctx.weak_predecessors(x));
    for (const T& y : preds) {
      if (!ctx.weak_lt(y, x)) return std::vector<T>{y, x};
    }
    for (const T& y : u) {
      if (ctx.weak_lt(y, x) && !std::binary_search(preds.begin(), preds.end(),
                                                   y, ctx.canonical_less)) {
        return std::vector<T>{y, x};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Exhaustive check of the four context axioms (plus predecessor consistency)
// over `universe`. Witnesses are the first violations in canonical order.
template <typename T>
AxiomReport<T> check_locale_axioms(const MbsContext<T>& ctx,
                                   std::span<const T> universe) {
  const std::vector<T> sorted =
      canonicalize(ctx, std::vector<T>(universe.begin(), universe.end()));
  const std::span<const T> u(sorted);
  AxiomReport<T> report;
  report.right_compatibility.witness =
      detail::first_right_compatibility_violation(ctx, u);
  report.well_foundedness.witness =
      detail::first_well_foundedness_violation(ctx, u);
  report.transitivity.witness = detail::first_transitivity_violation(ctx, u);
  report.reflects_membership.witness = detail::first_reflects_violation(ctx, u);
  report.predecessor_consistency.witness =
      detail::first_predecessor_mismatch(ctx, u);
  return report;
}

// r[j] = f[j] for j < n, g[j] otherwise.
template <typename T>
FiniteSeq<T> splice(std::size_t n, std::span<const T> f, std::span<const T> g) {
  if (f.size() != g.size()) {
    throw LengthMismatch("splice: sequences of length " +
                         std::to_string(f.size()) + " and " +
                         std::to_string(g.size()));
  }
  if (n > f.size()) {
    throw std::out_of_range("splice: cut position past the end");
  }
  FiniteSeq<T> r;
  r.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) r.push_back(n <= j ? g[j] : f[j]);
  return r;
}

// Least superset of `seed` closed under weak_predecessors, canonical order.
template <typename T>
std::vector<T> weak_closure(const MbsContext<T>& ctx, std::span<const T> seed,
                            std::size_t guard = kDefaultClosureGuard) {
  std::vector<T> seen;
  std::deque<T> todo(seed.begin(), seed.end());
  auto contains = [&](const T& x) {
    return std::find(seen.begin(), seen.end(), x) != seen.end();
  };
  // TODO: switch `seen` to a hashed set once contexts carry a hash handle;
  // the linear scan is quadratic in the closure size.
  while (!todo.empty()) {
    T x = std::move(todo.front());
    todo.pop_front();
    if (contains(x)) continue;
    seen.push_back(x);
    if (seen.size() > guard) throw ClosureOverflow(guard);
    for (T& y : ctx.weak_predecessors(x)) {
      if (!contains(y)) todo.push_back(std::move(y));
    }
  }
  return canonicalize(ctx, std::move(seen));
}

namespace detail {

// Index-based search for bad extensions over a fixed candidate list. A
// candidate c is blocked once some chosen element x has strong(x, c); whether
// a bad completion of a given length exists depends only on the blocked set.
template <typename T>
class BadExtensionSearch {
 public:
  using Mask = std::vector<bool>;

  BadExtensionSearch(const Relation<T>& strong, std::span<const T> candidates)
      : strong_(strong), candidates_(candidates), n_(candidates.size()) {
    above_.assign(n_, Mask(n_, false));
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t c = 0; c < n_; ++c) {
        above_[x][c] = strong(candidates[x], candidates[c]);
      }
    }
  }

  std::size_t size() const { return n_; }

  Mask blocked_by(std::span<const T> prefix) const {
    Mask m(n_, false);
    for (const T& p : prefix) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (!m[c] && strong_(p, candidates_[c])) m[c] = true;
      }
    }
    return m;
  }

  Mask block(Mask m, std::size_t x) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (above_[x][c]) m[c] = true;
    }
    return m;
  }

  bool reflexive_at(std::size_t x) const { return above_[x][x]; }

  bool feasible(const Mask& blocked, std::size_t remaining) {
    if (remaining == 0) return true;
    auto key = std::make_pair(blocked, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (std::size_t x = 0; x < n_ && !result; ++x) {
      if (!blocked[x]) result = feasible(block(blocked, x), remaining - 1);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const Relation<T>& strong_;
  std::span<const T> candidates_;
  std::size_t n_;
  std::vector<Mask> above_;
  std::map<std::pair<Mask, std::size_t>, bool> memo_;
};

}  // namespace detail

// Whether `prefix` extends, using elements of `candidates`, to a bad sequence
// of length `length`. A prefix that is already good never extends.
template <typename T>
bool extends_to_bad(const MbsContext<T>& ctx, std::span<const T> prefix,
                    std::span<const T> candidates, std::size_t length) {
  if (prefix.size() > length) return false;
  if (!is_bad(ctx.strong, prefix)) return false;
  const std::vector<T> cands =
      canonicalize(ctx, std::vector<T>(candidates.begin(), candidates.end()));
  detail::BadExtensionSearch<T> search(ctx.strong, std::span<const T>(cands));
  return search.feasible(search.blocked_by(prefix), length - prefix.size());
}

// Search formulation: for no y in the space with weak_lt(y, f[n]) does
// f[0..n-1] . y extend to a bad sequence of length |f|.
template <typename T>
bool is_min_at(const MbsContext<T>& ctx, std::span<const T> f, std::size_t n,
               std::span<const T> candidate_space) {
  if (n >= f.size()) throw std::out_of_range("is_min_at: position past the end");
  const std::vector<T> space = canonicalize(
      ctx, std::vector<T>(candidate_space.begin(), candidate_space.end()));
  std::vector<T> prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
  for (const T& y : space) {
    if (!ctx.weak_lt(y, f[n])) continue;
    prefix.push_back(y);
    const bool bad = extends_to_bad(ctx, std::span<const T>(prefix),
                                    std::span<const T>(space), f.size());
    prefix.pop_back();
    if (bad) return false;
  }
  return true;
}

// Enumeration formulation of is_min_at: walks every g with g[i] = f[i] for
// i < n, weak_lt(g[n], f[n]) and g[i] in the space for i >= n, testing each
// for a good pair. A prefix that is already good is not expanded further,
// since every completion of it is good too.
template <typename T>
bool is_min_at_by_enumeration(const MbsContext<T>& ctx, std::span<const T> f,
                              std::size_t n,
                              std::span<const T> candidate_space) {
  if (n >= f.size()) throw std::out_of_range("is_min_at: position past the end");
  const std::size_t length = f.size();
  std::vector<T> g(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));

  std::function<bool()> all_good = [&]() -> bool {
    if (!is_bad(ctx.strong, std::span<const T>(g))) return true;
    if (g.size() == length) return false;
    for (const T& y : candidate_space) {
      g.push_back(y);
      const bool ok = all_good();
      g.pop_back();
      if (!ok) return false;
    }
    return true;
  };

  for (const T& y : candidate_space) {
    if (!ctx.weak_lt(y, f[n])) continue;
    g.push_back(y);
    const bool ok = all_good();
    g.pop_back();
    if (!ok) return false;
  }
  return true;
}

// Greedy finite-horizon minimal bad sequence. Position by position, among
// closure elements x for which the chosen prefix followed by x still extends
// to a bad sequence of the input's length, picks a weak_lt-minimal one
// (canonically first among those).
template <typename T>
FiniteSeq<T> minimize_bad_sequence(const MbsContext<T>& ctx,
                                   std::span<const T> f,
                                   std::size_t guard = kDefaultClosureGuard) {
  if (f.empty()) return {};
  for (const T& x : f) {
    if (!ctx.vals_member(x)) {
      throw std::invalid_argument("minimize_bad_sequence: " + ctx.show(x) +
                                  " is not in the universe");
    }
  }
  if (auto pair = find_good_pair(ctx.strong, f)) {
    throw NotBadSequence("sequence is good at (" + std::to_string(pair->first) +
                         ", " + std::to_string(pair->second) + ")");
  }

  const std::vector<T> closure = weak_closure(ctx, f, guard);
  detail::BadExtensionSearch<T> search(ctx.strong,
                                       std::span<const T>(closure));
  const std::size_t length = f.size();
  auto blocked = search.blocked_by(std::span<const T>{});
  FiniteSeq<T> m;
  m.reserve(length);

  for (std::size_t pos = 0; pos < length; ++pos) {
    std::vector<std::size_t> qualifying;
    for (std::size_t x = 0; x < closure.size(); ++x) {
      if (blocked[x]) continue;
      if (search.feasible(search.block(blocked, x), length - pos - 1)) {
        qualifying.push_back(x);
      }
    }
    std::optional<std::size_t> choice;
    for (std::size_t x : qualifying) {
      const bool minimal = std::none_of(
          qualifying.begin(), qualifying.end(), [&](std::size_t y) {
            return ctx.weak_lt(closure[y], closure[x]);
          });
      if (minimal) {
        choice = x;
        break;
      }
    }
    // Unreachable for admissible inputs: f itself witnesses feasibility.
    if (!choice) throw std::logic_error("minimize_bad_sequence: no candidate");
    m.push_back(closure[*choice]);
    blocked = search.block(std::move(blocked), *choice);
  }
  return m;
}

// Longest bad sequence over `candidates` (repetition allowed), found by
// depth-first branch and bound in canonical order; among longest sequences the
// lexicographically first is returned. Length is capped at `max_length`
// (default |candidates| + 1); reaching the cap means strong is not reflexive
// on some candidate and bad sequences are unbounded.
template <typename T>
FiniteSeq<T> longest_bad_sequence(const MbsContext<T>& ctx,
                                  std::span<const T> candidates,
                                  std::optional<std::size_t> max_length = {}) {
  const std::vector<T> cands =
      canonicalize(ctx, std::vector<T>(candidates.begin(), candidates.end()));
  const std::size_t cap = max_length.value_or(cands.size() + 1);
  detail::BadExtensionSearch<T> search(ctx.strong, std::span<const T>(cands));
  using Mask = typename detail::BadExtensionSearch<T>::Mask;

  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  std::function<void(const Mask&)> dfs = [&](const Mask& blocked) {
    if (current.size() > best.size()) best = current;
    if (current.size() >= cap) return;
    std::size_t open = 0;
    bool unbounded = false;
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (blocked[x]) continue;
      ++open;
      if (!search.reflexive_at(x)) unbounded = true;
    }
    const std::size_t bound = unbounded ? cap : std::min(cap, current.size() + open);
    if (bound <= best.size()) return;
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (blocked[x]) continue;
      current.push_back(x);
      dfs(search.block(blocked, x));
      current.pop_back();
      if (best.size() >= cap) return;
    }
  };
  dfs(Mask(cands.size(), false));

  FiniteSeq<T> out;
  for (std::size_t i : best) out.push_back(cands[i]);
  return out;
}

}  // namespace wqo

#endif  // WQO_MBS_HPP_

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


// Binary relations over a value domain and finite-scale decision procedures
// for the classical order-theoretic predicates: reflexivity, transitivity,
// strict part, good/bad sequences, well-foundedness and almost-fullness.
//
// Infinite sequences are represented by finite prefixes (FiniteSeq). On a
// finite carrier, well-foundedness reduces to acyclicity and almost-fullness
// reduces to reflexivity (every sequence of length |carrier| + 1 repeats an
// element).

#ifndef WQO_RELATIONS_HPP_
#define WQO_RELATIONS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wqo {

template <typename T>
using FiniteSeq = std::vector<T>;

// A binary predicate together with an optional finite carrier. The predicate
// must be deterministic and free of side effects.
template <typename T>
class Relation {
 public:
  using Predicate = std::function<bool(const T&, const T&)>;

  explicit Relation(Predicate eval,
                    std::optional<std::vector<T>> carrier = std::nullopt)
      : eval_(std::move(eval)), carrier_(std::move(carrier)) {}

  bool operator()(const T& x, const T& y) const { return eval_(x, y); }
  bool eval(const T& x, const T& y) const { return eval_(x, y); }

  const std::optional<std::vector<T>>& carrier() const { return carrier_; }

  Relation with_carrier(std::vector<T> carrier) const {
    return Relation(eval_, std::move(carrier));
  }

 private:
  Predicate eval_;
  std::optional<std::vector<T>> carrier_;
};

struct GoodPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

template <typename T>
bool is_reflexive_on(const Relation<T>& rel, std::span<const T> carrier) {
  for (const T& a : carrier) {
    if (!rel(a, a)) return false;
  }
  return true;
}

template <typename T>
bool is_transitive_on(const Relation<T>& rel, std::span<const T> carrier) {
  for (const T& a : carrier) {
    for (const T& b : carrier) {
      if (!rel(a, b)) continue;
      for (const T& c : carrier) {
        if (rel(b, c) && !rel(a, c)) return false;
      }
    }
  }
  return true;
}

// x < y iff x <= y and not y <= x. The carrier is kept.
template <typename T>
Relation<T> strict_part(const Relation<T>& rel) {
  return Relation<T>(
      [rel](const T& x, const T& y) { return rel(x, y) && !rel(y, x); },
      rel.carrier());
}

// Lexicographically least (i, j) with i < j and rel(seq[i], seq[j]).
template <typename T>
std::optional<GoodPair> find_good_pair(const Relation<T>& rel,
                                       std::span<const T> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (rel(seq[i], seq[j])) return GoodPair{i, j};
    }
  }
  return std::nullopt;
}

template <typename T>
bool is_bad(const Relation<T>& rel, std::span<const T> seq) {
  return !find_good_pair(rel, seq).has_value();
}

// Returns a cycle x0, x1, ..., xk (with rel(x_{i+1}, x_i) and rel(x0, xk))
// inside the carrier, i.e. a witness for an infinite descending sequence.
// A self-loop is reported as a one-element cycle.
template <typename T>
std::optional<std::vector<T>> find_descending_cycle(
    const Relation<T>& rel, std::span<const T> carrier) {
  const std::size_t n = carrier.size();
  // below[x] lists every y in the carrier with rel(y, x).
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rel(carrier[y], carrier[x])) below[x].push_back(y);
    }
  }
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<std::size_t> path;

  // Iterative DFS; the frame holds (node, next successor offset).
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::kNew) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::kActive;
    path.assign(1, root);
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == below[node].size()) {
        mark[node] = Mark::kDone;
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const std::size_t succ = below[node][next++];
      if (mark[succ] == Mark::kActive) {
        std::vector<T> cycle;
        bool in_cycle = false;
        for (std::size_t v : path) {
          if (v == succ) in_cycle = true;
          if (in_cycle) cycle.push_back(carrier[v]);
        }
        return cycle;
      }
      if (mark[succ] == Mark::kNew) {
        mark[succ] = Mark::kActive;
        stack.emplace_back(succ, 0);
        path.push_back(succ);
      }
    }
  }
  return std::nullopt;
}

template <typename T>
bool is_well_founded_on_finite(const Relation<T>& rel,
                               std::span<const T> carrier) {
  return !find_descending_cycle(rel, carrier).has_value();
}

// On a finite carrier a relation is almost full iff it is reflexive there.
template <typename T>
bool is_almost_full_on_finite(const Relation<T>& rel,
                              std::span<const T> carrier) {
  return is_reflexive_on(rel, carrier);
}

// Self-check for is_almost_full_on_finite: enumerates all |C|^(|C|+1)
// sequences over the carrier and tests each one for a good pair.
template <typename T>
bool is_almost_full_exhaustive(const Relation<T>& rel,
                               std::span<const T> carrier) {
  const std::size_t n = carrier.size();
  if (n == 0) return true;
  const std::size_t len = n + 1;
  std::vector<std::size_t> digits(len, 0);
  std::vector<T> seq(len, carrier[0]);
  for (;;) {
    for (std::size_t k = 0; k < len; ++k) seq[k] = carrier[digits[k]];
    if (is_bad(rel, std::span<const T>(seq))) return false;
    std::size_t k = 0;
    while (k < len && ++digits[k] == n) digits[k++] = 0;
    if (k == len) return true;
  }
}

}  // namespace wqo

#endif  // WQO_RELATIONS_HPP_

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

#ifndef WQO_ERRORS_HPP_
#define WQO_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqo {

// Default bound on enumerated universes (lists or trees).
inline constexpr std::size_t kDefaultUniverseGuard = 10000;

// Default bound on the size of a weak closure.
inline constexpr std::size_t kDefaultClosureGuard = 100000;

// Raised when an enumeration would exceed its configured bound.
class UniverseTooLarge : public std::runtime_error {
 public:
  UniverseTooLarge(std::size_t requested, std::size_t guard)
      : std::runtime_error("universe of " + std::to_string(requested) +
                           " objects exceeds guard " + std::to_string(guard)),
        requested_(requested),
        guard_(guard) {}

  std::size_t requested() const { return requested_; }
  std::size_t guard() const { return guard_; }

 private:
  std::size_t requested_;
  std::size_t guard_;
};

// Raised when a weak closure grows past its bound, which signals a weak
// order that is not finitely branching.
class ClosureOverflow : public std::runtime_error {
 public:
  explicit ClosureOverflow(std::size_t guard)
      : std::runtime_error("weak closure exceeds guard " +
                           std::to_string(guard)) {}
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the minimizer when its input sequence already has a good pair.
class NotBadSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parse failure. `position` is a byte offset for term syntax and a 1-based
// line number for line-oriented files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wqo

#endif  // WQO_ERRORS_HPP_

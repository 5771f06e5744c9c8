// Copyright 2026 The permsynth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permsynth {

/// An element of [[2^n]] = {0, 1, ..., 2^n - 1}.
using Letter = std::uint32_t;

/// Largest supported register size; image tables are dense (2^n entries).
inline constexpr int kMaxQubits = 24;

/// Hamming distance: number of set bits in i XOR j.
int hamming(Letter i, Letter j);

enum class Parity { even, odd };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bijection of [[2^n]] stored as an explicit image table.
class Permutation {
 public:
  /// Identity on [[2^n]].
  explicit Permutation(int n);

  /// From an image table; throws std::invalid_argument unless `image` is a
  /// bijection of [[2^n]].
  Permutation(int n, std::vector<Letter> image);

  int qubits() const { return n_; }
  std::size_t size() const { return image_.size(); }  // 2^n

  Letter operator()(Letter x) const { return image_[x]; }
  const std::vector<Letter>& image() const { return image_; }

  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  int n_;
  std::vector<Letter> image_;
};

/// A two-letter swap, normalized so a < b.
struct Transposition {
  Letter a;
  Letter b;

  Transposition(Letter x, Letter y);

  /// True when hamming(a, b) == 1.
  bool is_adjacent() const { return hamming(a, b) == 1; }

  Permutation as_permutation(int n) const;

  auto operator<=>(const Transposition&) const = default;
};

/// An ordered list of >= 2 distinct letters (s0, ..., s_{m-1}) mapping
/// s0 -> s1 -> ... -> s_{m-1} -> s0. Canonical form rotates the smallest
/// letter to the front, so rotation-equivalent inputs compare equal.
class Cycle {
 public:
  explicit Cycle(std::vector<Letter> letters);
  Cycle(std::initializer_list<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool contains(Letter x) const;

  /// The cycle rotated so `anchor` comes first; anchor must be a member.
  Cycle rotated_to(Letter anchor) const;

  Permutation as_permutation(int n) const;

  bool operator==(const Cycle&) const = default;

 private:
  Cycle() = default;

  std::vector<Letter> letters_;
};

/// A product t1 * t2 * ... * tL written left to right. Cycle products
/// evaluate right to left: tL applies first.
struct TranspositionProduct {
  int n = 0;
  std::vector<Transposition> factors;

  Permutation evaluate() const;

  /// "(a,b)(c,d)..."; the empty product prints as "()".
  std::string str() const;

  bool operator==(const TranspositionProduct&) const = default;
};

/// Parses cycle notation ("(0,7,12)(4,5)", cycles need not be disjoint,
/// rightmost applies first) or one-line notation ("[2,3,1,0]"). The empty
/// string is the identity. Throws ParseError on malformed input, letters
/// out of range, a repeated letter within one cycle, or a one-line table
/// that is not a bijection.
Permutation parse_permutation(std::string_view text, int n);

/// p after q: (compose(p, q))(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// Cycles of length >= 2, each with its smallest letter first, sorted by
/// smallest letter. Fixed points are dropped; identity gives an empty list.
std::vector<Cycle> disjoint_cycles(const Permutation& p);

/// Anchored decomposition (s0,s_{m-1})...(s0,s2)(s0,s1); evaluating right
/// to left reproduces the cycle.
TranspositionProduct cycle_to_transpositions(const Cycle& c, int n);

/// Chain decomposition (s0,s1)(s1,s2)...(s_{m-2},s_{m-1}); also evaluates
/// to the cycle.
TranspositionProduct chain_transpositions(const Cycle& c, int n);

/// Chain decompositions of all disjoint cycles, concatenated in canonical
/// cycle order.
TranspositionProduct chain_transpositions(const Permutation& p);

Parity parity(const Permutation& p);

/// 2^n x 2^n 0/1 matrix with entry (p(c), c) set for every column c.
/// Display helper only; throws std::invalid_argument for n > 6.
std::vector<std::vector<std::uint8_t>> matrix_view(const Permutation& p);

/// Canonical disjoint-cycle string, e.g. "(0,7,12)(4,5)"; identity is "()".
std::string to_cycle_string(const Permutation& p);

/// One-line string, e.g. "[2,3,1,0]".
std::string to_one_line_string(const Permutation& p);

}  // namespace permsynth

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

#include <optional>
#include <span>
#include <vector>

#include "permsynth/perm.hpp"

namespace permsynth {

/// A walk i = steps[0], ..., steps[k] = j through [[2^n]] where consecutive
/// steps differ in exactly one bit. flipped_bits[t] is the bit toggled
/// between steps[t] and steps[t+1]; bits are flipped in increasing index
/// order, so k == hamming(i, j).
struct AdjacentPath {
  std::vector<Letter> steps;
  std::vector<int> flipped_bits;
};

/// The canonical Hamming walk from i to j (i != j).
AdjacentPath adjacent_path(Letter i, Letter j);

/// Expands the transposition (i, j) into exactly 2*hamming(i,j) - 1
/// bit-adjacent factors: the reversed rungs, the first rung, the rungs
/// again. A transposition that is already bit-adjacent stays a single
/// factor.
TranspositionProduct transposition_to_adjacent(Letter i, Letter j, int n);

/// max over `support` of hamming(x, s). Throws on empty support.
int distance_to_support(Letter x, std::span<const Letter> support);
int distance_to_perm(Letter x, const Permutation& p);
int distance_to_cycle(Letter x, const Cycle& c);

struct MinimalLetter {
  Letter letter;
  int distance;
  bool in_support;
};

/// Scans every x in [[2^n]] for one minimizing the max Hamming distance to
/// the support. Ties prefer the smaller anchored-expansion cost
/// sum(2*hamming(x,s) - 1), then the smaller x.
MinimalLetter minimal_letter_scan(std::span<const Letter> support, int n);

/// Serial reference for minimal_letter_scan; bit-identical results.
MinimalLetter minimal_letter_scan_serial(std::span<const Letter> support, int n);

MinimalLetter bitwise_minimal_letter(const Permutation& p);
MinimalLetter bitwise_minimal_letter(const Cycle& c, int n);

/// Anchored factors (s0,s_{m-1})...(s0,s1) with the cycle rotated so
/// `anchor` is s0, each factor expanded bit-adjacently.
TranspositionProduct internal_minimal_decomp(const Cycle& c, Letter anchor, int n);

/// Anchored factors (x,s0)(x,s_{m-1})...(x,s1)(x,s0) for an x outside the
/// cycle, each factor expanded bit-adjacently. s0 is the canonical first
/// (smallest) letter.
TranspositionProduct external_minimal_decomp(const Cycle& c, Letter external, int n);

enum class Strategy { naive, greedy, best };

const char* strategy_name(Strategy s);

/// How one disjoint cycle was decomposed.
struct CycleChoice {
  enum class Kind { direct, internal, external };

  Cycle cycle;
  Kind kind;
  std::optional<Letter> anchor;  // set for internal/external
  std::size_t factor_count;
};

/// A bit-wise adjacent decomposition plus its provenance. Every factor has
/// Hamming distance 1 and the factors evaluate (right to left) back to the
/// input permutation.
struct DecompReport {
  Strategy strategy;
  TranspositionProduct factors;
  std::vector<CycleChoice> per_cycle;
  std::size_t total_length = 0;
};

/// Decomposes p into bit-adjacent transpositions.
///
///  - naive:  chain factors per disjoint cycle, each expanded bit-adjacently.
///  - greedy: 2-cycles expand directly; longer cycles anchor on a bit-wise
///            minimal letter, internally when the letter lies in the cycle
///            and externally otherwise.
///  - best:   per cycle, the shortest internal anchoring over all members
///            vs the shortest external anchoring over all outside letters;
///            ties go internal.
DecompReport reduce(const Permutation& p, Strategy strategy);

}  // namespace permsynth

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

#include <string>
#include <vector>

#include "permsynth/perm.hpp"

namespace permsynth {

/// All bit-adjacent transpositions (I, I ^ 2^i) of [[2^n]], sorted;
/// exactly n * 2^(n-1) of them.
std::vector<Transposition> generators(int n);

struct OracleResult {
  /// Exact minimal factor count when exhausted; otherwise a proven lower
  /// bound (no shorter product exists within the searched depth).
  std::size_t length = 0;
  /// A shortest product evaluating to the query; empty when not exhausted.
  TranspositionProduct witness;
  bool exhausted = false;

  /// "length=<k> witness=(a,b)... exhausted=<bool>"; witness prints as
  /// "none" when the search gave up.
  std::string str() const;
};

/// Exact minimal bit-adjacent decomposition length via bidirectional BFS
/// from the identity and from p, meeting in the middle. Supports n <= 4
/// (image tables are packed into 64-bit keys). The result is deterministic:
/// frontiers expand in word order and ties resolve to the lexicographically
/// smallest candidate witness.
OracleResult minimal_length(const Permutation& p, int max_depth = 9);

/// Exhaustive check that every transposition of [[2^n]] has minimal length
/// 2*hamming - 1.
struct Fact1Report {
  struct Entry {
    Transposition t;
    std::size_t expected;
    std::size_t found;
    bool ok;
  };
  int n = 0;
  std::vector<Entry> entries;
  bool all_ok = true;
};

Fact1Report certify_fact1(int n);

}  // namespace permsynth

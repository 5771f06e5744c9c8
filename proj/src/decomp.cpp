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

#include "permsynth/decomp.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace permsynth {

AdjacentPath adjacent_path(Letter i, Letter j) {
  if (i == j) {
    throw std::invalid_argument("adjacent_path needs two distinct letters");
  }
  AdjacentPath path;
  path.steps.push_back(i);
  Letter diff = i ^ j;
  Letter cur = i;
  for (int bit = 0; diff >> bit; ++bit) {
    if ((diff >> bit) & 1u) {
      cur ^= Letter{1} << bit;
      path.steps.push_back(cur);
      path.flipped_bits.push_back(bit);
    }
  }
  return path;
}

TranspositionProduct transposition_to_adjacent(Letter i, Letter j, int n) {
  if ((std::max(i, j) >> n) != 0) {
    throw std::invalid_argument("letter out of range for the register size");
  }
  const AdjacentPath path = adjacent_path(i, j);
  const std::size_t k = path.flipped_bits.size();
  TranspositionProduct product{n, {}};
  product.factors.reserve(2 * k - 1);
  // Rungs of the walk past the first edge, reversed...
  for (std::size_t t = k; t >= 2; --t) {
    product.factors.emplace_back(path.steps[t - 1], path.steps[t]);
  }
  // ...the first edge...
  product.factors.emplace_back(path.steps[0], path.steps[1]);
  // ...and the rungs again.
  for (std::size_t t = 1; t + 1 <= k; ++t) {
    product.factors.emplace_back(path.steps[t], path.steps[t + 1]);
  }
  return product;
}

int distance_to_support(Letter x, std::span<const Letter> support) {
  if (support.empty()) {
    throw std::invalid_argument("distance is undefined against an empty support");
  }
  int best = 0;
  for (Letter s : support) {
    best = std::max(best, hamming(x, s));
  }
  return best;
}

namespace {

std::vector<Letter> moved_letters(const Permutation& p) {
  std::vector<Letter> moved;
  for (Letter x = 0; x < p.size(); ++x) {
    if (p(x) != x) moved.push_back(x);
  }
  return moved;
}

// (max distance, anchored-sum tie cost) of x against the support.
std::pair<int, long long> scan_key(Letter x, std::span<const Letter> support) {
  int dist = 0;
  long long cost = 0;
  for (Letter s : support) {
    const int b = hamming(x, s);
    dist = std::max(dist, b);
    cost += 2 * b - 1;
  }
  return {dist, cost};
}

}  // namespace

int distance_to_perm(Letter x, const Permutation& p) {
  const auto moved = moved_letters(p);
  if (moved.empty()) {
    throw std::invalid_argument("the identity has no moved letters");
  }
  return distance_to_support(x, moved);
}

int distance_to_cycle(Letter x, const Cycle& c) {
  return distance_to_support(x, c.letters());
}

MinimalLetter minimal_letter_scan_serial(std::span<const Letter> support, int n) {
  if (support.empty()) {
    throw std::invalid_argument("minimal letter scan needs a non-empty support");
  }
  const Letter size = Letter{1} << n;
  int best_dist = std::numeric_limits<int>::max();
  long long best_cost = std::numeric_limits<long long>::max();
  Letter best_x = 0;
  for (Letter x = 0; x < size; ++x) {
    const auto [dist, cost] = scan_key(x, support);
    if (std::tie(dist, cost, x) < std::tie(best_dist, best_cost, best_x)) {
      best_dist = dist;
      best_cost = cost;
      best_x = x;
    }
  }
  const bool in_support =
      std::find(support.begin(), support.end(), best_x) != support.end();
  return {best_x, best_dist, in_support};
}

MinimalLetter minimal_letter_scan(std::span<const Letter> support, int n) {
  if (support.empty()) {
    throw std::invalid_argument("minimal letter scan needs a non-empty support");
  }
  const Letter size = Letter{1} << n;
  int best_dist = std::numeric_limits<int>::max();
  long long best_cost = std::numeric_limits<long long>::max();
  Letter best_x = 0;
  // The (dist, cost, x) argmin is an associative, commutative reduction, so
  // any thread partition lands on the same letter the serial scan picks.
#pragma omp parallel
  {
    int t_dist = std::numeric_limits<int>::max();
    long long t_cost = std::numeric_limits<long long>::max();
    Letter t_x = 0;
#pragma omp for nowait schedule(static)
    for (long long xi = 0; xi < static_cast<long long>(size); ++xi) {
      const Letter x = static_cast<Letter>(xi);
      const auto [dist, cost] = scan_key(x, support);
      if (std::tie(dist, cost, x) < std::tie(t_dist, t_cost, t_x)) {
        t_dist = dist;
        t_cost = cost;
        t_x = x;
      }
    }
#pragma omp critical
    {
      if (std::tie(t_dist, t_cost, t_x) < std::tie(best_dist, best_cost, best_x)) {
        best_dist = t_dist;
        best_cost = t_cost;
        best_x = t_x;
      }
    }
  }
  const bool in_support =
      std::find(support.begin(), support.end(), best_x) != support.end();
  return {best_x, best_dist, in_support};
}

MinimalLetter bitwise_minimal_letter(const Permutation& p) {
  const auto moved = moved_letters(p);
  if (moved.empty()) {
    throw std::invalid_argument("the identity has no bit-wise minimal letter");
  }
  return minimal_letter_scan(moved, p.qubits());
}

MinimalLetter bitwise_minimal_letter(const Cycle& c, int n) {
  return minimal_letter_scan(c.letters(), n);
}

namespace {

void append_expanded(TranspositionProduct& out, Letter a, Letter b) {
  TranspositionProduct part = transposition_to_adjacent(a, b, out.n);
  out.factors.insert(out.factors.end(), part.factors.begin(), part.factors.end());
}

}  // namespace

TranspositionProduct internal_minimal_decomp(const Cycle& c, Letter anchor, int n) {
  const Cycle rotated = c.rotated_to(anchor);
  const auto& s = rotated.letters();
  TranspositionProduct product{n, {}};
  for (std::size_t i = s.size() - 1; i >= 1; --i) {
    append_expanded(product, s[0], s[i]);
  }
  return product;
}

TranspositionProduct external_minimal_decomp(const Cycle& c, Letter external, int n) {
  if (c.contains(external)) {
    throw std::invalid_argument("external letter must lie outside the cycle");
  }
  const auto& s = c.letters();
  TranspositionProduct product{n, {}};
  append_expanded(product, external, s[0]);
  for (std::size_t i = s.size() - 1; i >= 1; --i) {
    append_expanded(product, external, s[i]);
  }
  append_expanded(product, external, s[0]);
  return product;
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::naive: return "naive";
    case Strategy::greedy: return "greedy";
    case Strategy::best: return "best";
  }
  return "?";
}

namespace {

// Expanded length of the anchored product for the whole support, every
// factor charged 2*hamming - 1.
long long anchored_length(Letter anchor, std::span<const Letter> others) {
  long long len = 0;
  for (Letter s : others) {
    if (s != anchor) len += 2 * hamming(anchor, s) - 1;
  }
  return len;
}

TranspositionProduct decompose_cycle_best(const Cycle& c, int n,
                                          CycleChoice& choice) {
  const auto& s = c.letters();

  long long best_internal = std::numeric_limits<long long>::max();
  Letter internal_anchor = s[0];
  for (Letter candidate : s) {
    const long long len = anchored_length(candidate, s);
    if (len < best_internal ||
        (len == best_internal && candidate < internal_anchor)) {
      best_internal = len;
      internal_anchor = candidate;
    }
  }

  // External cost gets an extra (x, s0) factor on top of the anchored sum.
  long long best_external = std::numeric_limits<long long>::max();
  Letter external_anchor = 0;
  const Letter size = Letter{1} << n;
  for (Letter x = 0; x < size; ++x) {
    if (c.contains(x)) continue;
    const long long len = anchored_length(x, s) + (2 * hamming(x, s[0]) - 1);
    if (len < best_external) {
      best_external = len;
      external_anchor = x;
    }
  }

  if (best_external < best_internal) {
    choice.kind = CycleChoice::Kind::external;
    choice.anchor = external_anchor;
    return external_minimal_decomp(c, external_anchor, n);
  }
  choice.kind = CycleChoice::Kind::internal;
  choice.anchor = internal_anchor;
  return internal_minimal_decomp(c, internal_anchor, n);
}

TranspositionProduct decompose_cycle(const Cycle& c, int n, Strategy strategy,
                                     CycleChoice& choice) {
  if (strategy == Strategy::naive) {
    choice.kind = CycleChoice::Kind::direct;
    TranspositionProduct product{n, {}};
    for (const Transposition& t : chain_transpositions(c, n).factors) {
      TranspositionProduct part = transposition_to_adjacent(t.a, t.b, n);
      product.factors.insert(product.factors.end(), part.factors.begin(),
                             part.factors.end());
    }
    return product;
  }

  if (c.length() == 2) {
    // Fact-1 expansion of a lone transposition is already optimal.
    choice.kind = CycleChoice::Kind::direct;
    return transposition_to_adjacent(c.letters()[0], c.letters()[1], n);
  }

  if (strategy == Strategy::best) {
    return decompose_cycle_best(c, n, choice);
  }

  const MinimalLetter min = bitwise_minimal_letter(c, n);
  if (min.in_support) {
    choice.kind = CycleChoice::Kind::internal;
    choice.anchor = min.letter;
    return internal_minimal_decomp(c, min.letter, n);
  }
  choice.kind = CycleChoice::Kind::external;
  choice.anchor = min.letter;
  return external_minimal_decomp(c, min.letter, n);
}

}  // namespace

DecompReport reduce(const Permutation& p, Strategy strategy) {
  DecompReport report;
  report.strategy = strategy;
  report.factors = TranspositionProduct{p.qubits(), {}};
  for (const Cycle& c : disjoint_cycles(p)) {
    CycleChoice choice{c, CycleChoice::Kind::direct, std::nullopt, 0};
    TranspositionProduct part = decompose_cycle(c, p.qubits(), strategy, choice);
    choice.factor_count = part.factors.size();
    report.factors.factors.insert(report.factors.factors.end(),
                                  part.factors.begin(), part.factors.end());
    report.per_cycle.push_back(std::move(choice));
  }
  report.total_length = report.factors.factors.size();
  return report;
}

}  // namespace permsynth

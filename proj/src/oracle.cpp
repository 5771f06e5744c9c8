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

#include "permsynth/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace permsynth {

std::vector<Transposition> generators(int n) {
  if (n < 1) throw std::invalid_argument("need at least one qubit");
  const Letter size = Letter{1} << n;
  std::vector<Transposition> gens;
  gens.reserve(static_cast<std::size_t>(n) << (n - 1));
  for (Letter i = 0; i < size; ++i) {
    for (int bit = 0; bit < n; ++bit) {
      const Letter j = i ^ (Letter{1} << bit);
      if (i < j) gens.emplace_back(i, j);
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::string OracleResult::str() const {
  std::string out = "length=" + std::to_string(length);
  out += " witness=";
  out += exhausted ? witness.str() : "none";
  out += " exhausted=";
  out += exhausted ? "true" : "false";
  return out;
}

namespace {

// Image tables on [[2^n]] for n <= 4 fit into one 64-bit key, a nibble per
// entry. Right-multiplying by the transposition (a, b) swaps nibbles a and b.
using PackedPerm = std::uint64_t;

PackedPerm pack(const Permutation& p) {
  PackedPerm key = 0;
  for (std::size_t c = 0; c < p.size(); ++c) {
    key |= static_cast<PackedPerm>(p(static_cast<Letter>(c))) << (4 * c);
  }
  return key;
}

PackedPerm identity_key(int n) {
  PackedPerm key = 0;
  for (std::size_t c = 0; c < (std::size_t{1} << n); ++c) {
    key |= static_cast<PackedPerm>(c) << (4 * c);
  }
  return key;
}

PackedPerm swap_entries(PackedPerm key, Letter a, Letter b) {
  const PackedPerm va = (key >> (4 * a)) & 0xf;
  const PackedPerm vb = (key >> (4 * b)) & 0xf;
  key &= ~((PackedPerm{0xf} << (4 * a)) | (PackedPerm{0xf} << (4 * b)));
  return key | (va << (4 * b)) | (vb << (4 * a));
}

struct Visit {
  PackedPerm parent = 0;
  std::uint8_t gen = 0;
  std::uint8_t depth = 0;
};

struct Side {
  std::unordered_map<PackedPerm, Visit> visited;
  std::vector<PackedPerm> frontier;  // discovery order == word order
  int depth = 0;
};

// Expands one BFS level. Processing the frontier in discovery order with
// generators in ascending order discovers each state through its
// lexicographically smallest word of that depth.
void expand(Side& side, const std::vector<Transposition>& gens) {
  std::vector<PackedPerm> next;
  next.reserve(side.frontier.size() * 2);
  ++side.depth;
  for (PackedPerm state : side.frontier) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const PackedPerm child = swap_entries(state, gens[gi].a, gens[gi].b);
      auto [it, inserted] = side.visited.try_emplace(
          child, Visit{state, static_cast<std::uint8_t>(gi),
                       static_cast<std::uint8_t>(side.depth)});
      if (inserted) next.push_back(child);
    }
  }
  side.frontier = std::move(next);
}

std::vector<std::uint8_t> word_of(const Side& side, PackedPerm state) {
  std::vector<std::uint8_t> word;
  PackedPerm cur = state;
  for (;;) {
    const Visit& v = side.visited.at(cur);
    if (v.depth == 0) break;
    word.push_back(v.gen);
    cur = v.parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

OracleResult minimal_length(const Permutation& p, int max_depth) {
  if (p.qubits() > 4) {
    throw std::invalid_argument("the oracle is exhaustive search; n <= 4 only");
  }
  if (max_depth < 0) max_depth = 0;
  const std::vector<Transposition> gens = generators(p.qubits());

  OracleResult result;
  result.witness.n = p.qubits();

  const PackedPerm id_key = identity_key(p.qubits());
  const PackedPerm target_key = pack(p);
  if (id_key == target_key) {
    result.length = 0;
    result.exhausted = true;
    return result;
  }

  Side fwd;  // words w with eval(w) = state
  fwd.visited.emplace(id_key, Visit{});
  fwd.frontier.push_back(id_key);
  Side bwd;  // words w with state = p * eval(w)
  bwd.visited.emplace(target_key, Visit{});
  bwd.frontier.push_back(target_key);

  auto collect_meets = [&](std::vector<PackedPerm>& meets) {
    meets.clear();
    const Side& small = fwd.visited.size() <= bwd.visited.size() ? fwd : bwd;
    const Side& large = fwd.visited.size() <= bwd.visited.size() ? bwd : fwd;
    for (const auto& [state, visit] : small.visited) {
      if (large.visited.contains(state)) meets.push_back(state);
    }
  };

  std::vector<PackedPerm> meets;
  collect_meets(meets);
  while (meets.empty() && fwd.depth + bwd.depth < max_depth) {
    Side& side = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    expand(side, gens);
    collect_meets(meets);
  }

  if (meets.empty()) {
    // Completed BFS to combined depth max_depth without meeting: every
    // product of <= max_depth generators differs from p.
    result.length = static_cast<std::size_t>(max_depth) + 1;
    result.exhausted = false;
    return result;
  }

  // Total length at any meet equals its two BFS depths; the smallest sum is
  // the exact minimum (a shorter product would have met earlier).
  std::size_t best_total = SIZE_MAX;
  for (PackedPerm state : meets) {
    const std::size_t total =
        fwd.visited.at(state).depth + bwd.visited.at(state).depth;
    best_total = std::min(best_total, total);
  }

  // Witness = forward word, then the backward word reversed (generators are
  // involutions). Ties across meet states resolve to the lexicographically
  // smallest combined word.
  std::vector<std::uint8_t> best_word;
  bool have_word = false;
  for (PackedPerm state : meets) {
    const std::size_t total =
        fwd.visited.at(state).depth + bwd.visited.at(state).depth;
    if (total != best_total) continue;
    std::vector<std::uint8_t> word = word_of(fwd, state);
    std::vector<std::uint8_t> back = word_of(bwd, state);
    word.insert(word.end(), back.rbegin(), back.rend());
    if (!have_word || word < best_word) {
      best_word = std::move(word);
      have_word = true;
    }
  }

  result.length = best_total;
  result.exhausted = true;
  result.witness.factors.reserve(best_word.size());
  for (std::uint8_t gi : best_word) {
    result.witness.factors.push_back(gens[gi]);
  }
  return result;
}

Fact1Report certify_fact1(int n) {
  Fact1Report report;
  report.n = n;
  const Letter size = Letter{1} << n;
  for (Letter i = 0; i < size; ++i) {
    for (Letter j = i + 1; j < size; ++j) {
      const std::size_t expected = 2 * static_cast<std::size_t>(hamming(i, j)) - 1;
      const OracleResult r =
          minimal_length(Transposition(i, j).as_permutation(n), 2 * n - 1);
      const bool ok = r.exhausted && r.length == expected;
      report.entries.push_back({Transposition(i, j), expected, r.length, ok});
      report.all_ok = report.all_ok && ok;
    }
  }
  return report;
}

}  // namespace permsynth

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "permsynth/decomp.hpp"
#include "test_util.hpp"

using namespace permsynth;
using permsynth::testing::all_permutations;
using permsynth::testing::random_permutation;

namespace {

bool all_adjacent(const TranspositionProduct& p) {
  for (const Transposition& t : p.factors) {
    if (!t.is_adjacent()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("adjacent path") {
  const AdjacentPath walk = adjacent_path(7, 12);
  CHECK(walk.steps == std::vector<Letter>{7, 6, 4, 12});
  CHECK(walk.flipped_bits == std::vector<int>{0, 1, 3});

  CHECK(adjacent_path(4, 6).steps == std::vector<Letter>{4, 6});
  CHECK(adjacent_path(4, 7).steps == std::vector<Letter>{4, 5, 7});
  CHECK(adjacent_path(4, 7).flipped_bits == std::vector<int>{0, 1});
  CHECK_THROWS_AS(adjacent_path(3, 3), std::invalid_argument);
}

TEST_CASE("adjacent path steps differ by one bit each") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<Letter> letter(0, 255);
  for (int round = 0; round < 200; ++round) {
    const Letter i = letter(rng);
    const Letter j = letter(rng);
    if (i == j) continue;
    const AdjacentPath walk = adjacent_path(i, j);
    CHECK(walk.steps.front() == i);
    CHECK(walk.steps.back() == j);
    CHECK(walk.steps.size() == std::size_t(hamming(i, j)) + 1);
    for (std::size_t s = 0; s + 1 < walk.steps.size(); ++s) {
      CHECK(hamming(walk.steps[s], walk.steps[s + 1]) == 1);
      CHECK(walk.steps[s + 1] == (walk.steps[s] ^ (Letter{1} << walk.flipped_bits[s])));
    }
  }
}

TEST_CASE("transposition expansion golden values") {
  CHECK(transposition_to_adjacent(7, 12, 4).str() == "(4,12)(4,6)(6,7)(4,6)(4,12)");
  CHECK(transposition_to_adjacent(4, 6, 3).str() == "(4,6)");
  CHECK(transposition_to_adjacent(4, 7, 3).str() == "(5,7)(4,5)(5,7)");
  CHECK_THROWS_AS(transposition_to_adjacent(3, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(transposition_to_adjacent(3, 9, 3), std::invalid_argument);
}

TEST_CASE("transposition expansion, exhaustive n=4") {
  for (Letter i = 0; i < 16; ++i) {
    for (Letter j = i + 1; j < 16; ++j) {
      const TranspositionProduct product = transposition_to_adjacent(i, j, 4);
      CHECK(product.factors.size() == 2 * std::size_t(hamming(i, j)) - 1);
      CHECK(all_adjacent(product));
      CHECK(product.evaluate() == Transposition(i, j).as_permutation(4));
    }
  }
}

TEST_CASE("distance to a permutation") {
  CHECK(distance_to_perm(0, parse_permutation("(1,4)(2,8)", 4)) == 1);
  CHECK(distance_to_cycle(0, Cycle{0, 2, 5}) == 2);
  CHECK(distance_to_cycle(4, Cycle{4, 6}) == hamming(4, 6));
  CHECK_THROWS_AS(distance_to_perm(0, Permutation(3)), std::invalid_argument);
}

TEST_CASE("bit-wise minimal letters") {
  const MinimalLetter a = bitwise_minimal_letter(parse_permutation("(1,4)(2,8)", 4));
  CHECK(a.letter == 0);
  CHECK(a.distance == 1);
  CHECK_FALSE(a.in_support);

  const MinimalLetter b = bitwise_minimal_letter(parse_permutation("(0,2,5)", 3));
  CHECK(b.letter == 0);
  CHECK(b.distance == 2);
  CHECK(b.in_support);

  const MinimalLetter c = bitwise_minimal_letter(Cycle{0, 7, 12}, 4);
  CHECK(c.letter == 4);
  CHECK(c.distance == 2);
  CHECK_FALSE(c.in_support);

  CHECK_THROWS_AS(bitwise_minimal_letter(Permutation(3)), std::invalid_argument);
}

TEST_CASE("minimal letter scan matches the serial reference") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 10; ++n) {
    std::uniform_int_distribution<Letter> letter(0, (Letter{1} << n) - 1);
    const std::size_t wanted = std::min<std::size_t>(5, std::size_t{1} << (n - 1));
    for (int round = 0; round < 20; ++round) {
      std::vector<Letter> support;
      while (support.size() < wanted) {
        const Letter x = letter(rng);
        if (std::find(support.begin(), support.end(), x) == support.end()) {
          support.push_back(x);
        }
      }
      const MinimalLetter serial = minimal_letter_scan_serial(support, n);
      const MinimalLetter parallel = minimal_letter_scan(support, n);
      CHECK(serial.letter == parallel.letter);
      CHECK(serial.distance == parallel.distance);
      CHECK(serial.in_support == parallel.in_support);
    }
  }
}

TEST_CASE("minimal letter really minimizes the max distance") {
  std::mt19937 rng(55);
  for (int round = 0; round < 30; ++round) {
    const Permutation p = random_permutation(4, rng);
    if (p.is_identity()) continue;
    const MinimalLetter min = bitwise_minimal_letter(p);
    for (Letter y = 0; y < 16; ++y) {
      CHECK(min.distance <= distance_to_perm(y, p));
    }
  }
}

TEST_CASE("internal minimal decomposition") {
  CHECK(internal_minimal_decomp(Cycle{0, 2, 5}, 0, 3).str() ==
        "(1,5)(0,1)(1,5)(0,2)");
  CHECK(internal_minimal_decomp(Cycle{4, 6}, 4, 3).str() == "(4,6)");
  const TranspositionProduct quad = internal_minimal_decomp(Cycle{0, 2, 1, 3}, 0, 2);
  CHECK(quad.str() == "(1,3)(0,1)(1,3)(0,1)(0,2)");
  CHECK(quad.factors.size() == 5);
  CHECK(quad.evaluate() == Cycle({0, 2, 1, 3}).as_permutation(2));
  CHECK_THROWS_AS(internal_minimal_decomp(Cycle{0, 2, 5}, 3, 3),
                  std::invalid_argument);
}

TEST_CASE("external minimal decomposition") {
  const TranspositionProduct ext = external_minimal_decomp(Cycle{0, 7, 12}, 4, 4);
  CHECK(ext.str() == "(0,4)(4,12)(5,7)(4,5)(5,7)(0,4)");
  CHECK(ext.factors.size() == 6);
  CHECK(ext.evaluate() == Cycle({0, 7, 12}).as_permutation(4));

  const TranspositionProduct pair = external_minimal_decomp(Cycle{1, 4}, 0, 3);
  CHECK(pair.str() == "(0,1)(0,4)(0,1)");
  CHECK(pair.evaluate() == Cycle({1, 4}).as_permutation(3));

  CHECK_THROWS_AS(external_minimal_decomp(Cycle{0, 7, 12}, 7, 4),
                  std::invalid_argument);
}

TEST_CASE("reduce: paper worked example (0,2,5)") {
  const Permutation sigma = parse_permutation("(0,2,5)", 3);

  const DecompReport naive = reduce(sigma, Strategy::naive);
  CHECK(naive.factors.str() == "(0,2)(1,5)(1,3)(2,3)(1,3)(1,5)");
  CHECK(naive.total_length == 6);
  CHECK(naive.factors.evaluate() == sigma);

  const DecompReport greedy = reduce(sigma, Strategy::greedy);
  CHECK(greedy.factors.str() == "(1,5)(0,1)(1,5)(0,2)");
  CHECK(greedy.total_length == 4);
  CHECK(greedy.factors.evaluate() == sigma);
  REQUIRE(greedy.per_cycle.size() == 1);
  CHECK(greedy.per_cycle[0].kind == CycleChoice::Kind::internal);
  CHECK(greedy.per_cycle[0].anchor == Letter{0});
}

TEST_CASE("reduce: paper end-to-end example (0,7,12)(4,5)") {
  const Permutation pi = parse_permutation("(0,7,12)(4,5)", 4);
  const DecompReport greedy = reduce(pi, Strategy::greedy);
  CHECK(greedy.factors.str() == "(0,4)(4,12)(5,7)(4,5)(5,7)(0,4)(4,5)");
  CHECK(greedy.total_length == 7);
  CHECK(greedy.factors.evaluate() == pi);
  REQUIRE(greedy.per_cycle.size() == 2);
  CHECK(greedy.per_cycle[0].kind == CycleChoice::Kind::external);
  CHECK(greedy.per_cycle[0].anchor == Letter{4});
  CHECK(greedy.per_cycle[0].factor_count == 6);
  CHECK(greedy.per_cycle[1].kind == CycleChoice::Kind::direct);
  CHECK(greedy.per_cycle[1].factor_count == 1);
}

TEST_CASE("reduce: identity and lone transpositions") {
  const DecompReport empty = reduce(Permutation(3), Strategy::greedy);
  CHECK(empty.total_length == 0);
  CHECK(empty.per_cycle.empty());

  // A 2-cycle expands directly, never through an external anchor.
  const DecompReport pair = reduce(parse_permutation("(7,12)", 4), Strategy::greedy);
  CHECK(pair.factors.str() == "(4,12)(4,6)(6,7)(4,6)(4,12)");
  REQUIRE(pair.per_cycle.size() == 1);
  CHECK(pair.per_cycle[0].kind == CycleChoice::Kind::direct);
}

TEST_CASE("reduce invariants, exhaustive n=2") {
  const std::size_t bound = (2 * 2 - 1) * (4 - 1);
  for (const Permutation& p : all_permutations(2)) {
    for (Strategy s : {Strategy::naive, Strategy::greedy, Strategy::best}) {
      const DecompReport report = reduce(p, s);
      CHECK(all_adjacent(report.factors));
      CHECK(report.factors.evaluate() == p);
      CHECK(report.total_length <= bound);
      const Parity expected =
          report.total_length % 2 == 0 ? Parity::even : Parity::odd;
      CHECK(parity(p) == expected);
    }
  }
}

TEST_CASE("reduce invariants, randomized n=3..6") {
  std::mt19937 rng(31);
  for (int n = 3; n <= 6; ++n) {
    const std::size_t bound = (2 * std::size_t(n) - 1) * ((std::size_t{1} << n) - 1);
    for (int round = 0; round < 40; ++round) {
      const Permutation p = random_permutation(n, rng);
      std::size_t greedy_len = 0, best_len = 0;
      for (Strategy s : {Strategy::naive, Strategy::greedy, Strategy::best}) {
        const DecompReport report = reduce(p, s);
        CHECK(all_adjacent(report.factors));
        CHECK(report.factors.evaluate() == p);
        CHECK(report.total_length <= bound);
        const Parity expected =
            report.total_length % 2 == 0 ? Parity::even : Parity::odd;
        CHECK(parity(p) == expected);
        if (s == Strategy::greedy) greedy_len = report.total_length;
        if (s == Strategy::best) best_len = report.total_length;
      }
      CHECK(best_len <= greedy_len);
    }
  }
}

TEST_CASE("greedy beats naive on the paper examples") {
  const Permutation sigma = parse_permutation("(0,2,5)", 3);
  CHECK(reduce(sigma, Strategy::greedy).total_length <
        reduce(sigma, Strategy::naive).total_length);
  const Permutation pi = parse_permutation("(0,7,12)(4,5)", 4);
  CHECK(reduce(pi, Strategy::greedy).total_length <=
        reduce(pi, Strategy::naive).total_length);
}

TEST_CASE("minimal letter scan stays fast at n=10") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<Letter> letter(0, (Letter{1} << 10) - 1);
  std::vector<Letter> cycle_letters;
  while (cycle_letters.size() < 8) {
    const Letter x = letter(rng);
    if (std::find(cycle_letters.begin(), cycle_letters.end(), x) ==
        cycle_letters.end()) {
      cycle_letters.push_back(x);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const MinimalLetter min = bitwise_minimal_letter(Cycle(cycle_letters), 10);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  CHECK(min.distance <= 10);
  CHECK(elapsed.count() < 1.0);
}

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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "permsynth/circuit.hpp"
#include "permsynth/decomp.hpp"
#include "permsynth/oracle.hpp"
#include "permsynth/perm.hpp"
#include "permsynth/sim.hpp"
#include "test_util.hpp"

using namespace permsynth;
using permsynth::testing::all_permutations;
using permsynth::testing::random_permutation;
using permsynth::testing::random_product;

namespace {

struct Check {
  std::string label;
  std::function<bool(std::string&)> run;
  double budget_seconds;
};

#define EXPECT(cond)                                     \
  do {                                                   \
    if (!(cond)) {                                       \
      detail = "failed: " #cond;                         \
      return false;                                      \
    }                                                    \
  } while (0)

bool fact1_golden(std::string& detail) {
  const TranspositionProduct expansion = transposition_to_adjacent(7, 12, 4);
  EXPECT(expansion.str() == "(4,12)(4,6)(6,7)(4,6)(4,12)");
  const OracleResult r = minimal_length(parse_permutation("(7,12)", 4), 6);
  EXPECT(r.exhausted);
  EXPECT(r.length == 5);
  EXPECT(r.length == 2 * std::size_t(hamming(7, 12)) - 1);
  return true;
}

bool fact1_exhaustive(std::string& detail) {
  for (int n : {2, 3}) {
    const Fact1Report report = certify_fact1(n);
    EXPECT(report.all_ok);
    EXPECT(report.entries.size() == (n == 2 ? 6u : 28u));
  }
  return true;
}

bool worked_example_025(std::string& detail) {
  const Permutation sigma = parse_permutation("(0,2,5)", 3);
  const DecompReport naive = reduce(sigma, Strategy::naive);
  EXPECT(naive.factors.str() == "(0,2)(1,5)(1,3)(2,3)(1,3)(1,5)");
  EXPECT(naive.total_length == 6);
  EXPECT(naive.factors.evaluate() == sigma);
  const DecompReport greedy = reduce(sigma, Strategy::greedy);
  EXPECT(greedy.factors.str() == "(1,5)(0,1)(1,5)(0,2)");
  EXPECT(greedy.total_length == 4);
  EXPECT(greedy.factors.evaluate() == sigma);
  const OracleResult r = minimal_length(sigma, 6);
  EXPECT(r.exhausted);
  EXPECT(r.length == 4);
  return true;
}

bool end_to_end_4qubit(std::string& detail) {
  const Permutation pi = parse_permutation("(0,7,12)(4,5)", 4);
  const DecompReport greedy = reduce(pi, Strategy::greedy);
  EXPECT(greedy.factors.str() == "(0,4)(4,12)(5,7)(4,5)(5,7)(0,4)(4,5)");
  EXPECT(greedy.total_length == 7);
  const Circuit c = synth_no_ancilla(greedy.factors, 4);
  EXPECT(c.gates.size() == 7);
  EXPECT(gate_count(c).mct == 7);
  EXPECT(verify(c, pi).equal);
  const OracleResult r = minimal_length(pi, 9);
  EXPECT(r.exhausted);
  EXPECT(r.length == 7);
  return true;
}

bool one_ancilla_counts(std::string& detail) {
  const Circuit c =
      synth_one_ancilla(TranspositionProduct{3, {Transposition(5, 6)}}, 3);
  const GateCount base = gate_count(c);
  EXPECT(base.mct == 4);
  EXPECT(base.cnot == 2);

  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  int built = 0;
  while (built < 500) {
    for (int n = 3; n <= 5 && built < 500; ++n, ++built) {
      const TranspositionProduct product = random_product(n, len(rng), rng);
      const std::size_t L = product.factors.size();
      std::size_t expected = 0;
      for (const Transposition& t : product.factors) {
        expected += 4 + std::size_t(hamming(t.a, t.b));
      }
      const GateCount count = gate_count(synth_one_ancilla(product, n));
      EXPECT(count.total == expected);
      EXPECT(count.total >= 5 * L);
      EXPECT(count.total <= (4 + std::size_t(n)) * L);
    }
  }
  return true;
}

bool contraction(std::string& detail) {
  const Permutation sigma = parse_permutation("(3,6,5)", 3);
  const Circuit full = synth_one_ancilla(chain_transpositions(sigma), 3);
  EXPECT(full.gates.size() == 12);
  const Circuit contracted = peephole_cancel(full);
  EXPECT(contracted.gates.size() == 10);
  EXPECT(circuit_to_permutation(full) == sigma);
  EXPECT(circuit_to_permutation(contracted) == sigma);
  return true;
}

bool round_trip_totality(std::string& detail) {
  std::mt19937 rng(103);
  std::vector<Permutation> pool = all_permutations(2);
  for (int n = 3; n <= 5; ++n) {
    for (int round = 0; round < 200; ++round) {
      pool.push_back(random_permutation(n, rng));
    }
  }
  for (const Permutation& p : pool) {
    const int n = p.qubits();
    const std::size_t bound =
        (2 * std::size_t(n) - 1) * ((std::size_t{1} << n) - 1);
    const DecompReport greedy = reduce(p, Strategy::greedy);
    EXPECT(greedy.total_length <= bound);
    const Circuit no_anc = synth_no_ancilla(greedy.factors, n);
    EXPECT(circuit_to_permutation(no_anc) == p);
    // circuit_to_permutation throws DirtyAncillaError unless the whole
    // ancilla=0 subspace comes back clean.
    const Circuit one_anc = synth_one_ancilla(chain_transpositions(p), n);
    EXPECT(circuit_to_permutation(one_anc) == p);
  }
  return true;
}

bool parity_invariant(std::string& detail) {
  std::mt19937 rng(107);
  std::vector<Permutation> pool = all_permutations(2);
  for (int n = 3; n <= 5; ++n) {
    for (int round = 0; round < 60; ++round) {
      pool.push_back(random_permutation(n, rng));
    }
  }
  for (const Permutation& p : pool) {
    for (Strategy s : {Strategy::naive, Strategy::greedy, Strategy::best}) {
      const DecompReport report = reduce(p, s);
      const Parity expected =
          report.total_length % 2 == 0 ? Parity::even : Parity::odd;
      EXPECT(parity(p) == expected);
    }
  }
  return true;
}

bool simulator_semantics(std::string& detail) {
  const Gate gate46 =
      make_gate(1, {{0, Polarity::negative}, {2, Polarity::positive}});
  for (BasisState s = 0; s < 8; ++s) {
    const BasisState expected = (s == 4) ? 6 : (s == 6) ? 4 : s;
    EXPECT(apply_gate(s, gate46) == expected);
  }
  return true;
}

bool scan_regression_guard(std::string& detail) {
  std::mt19937 rng(109);
  std::uniform_int_distribution<Letter> letter(0, (Letter{1} << 10) - 1);
  std::vector<Letter> letters;
  while (letters.size() < 8) {
    const Letter x = letter(rng);
    if (std::find(letters.begin(), letters.end(), x) == letters.end()) {
      letters.push_back(x);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const MinimalLetter min = bitwise_minimal_letter(Cycle(letters), 10);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  EXPECT(min.distance >= 1);
  EXPECT(elapsed.count() < 1.0);
  return true;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"Fact 1 golden example (7,12)", fact1_golden, 10.0},
      {"Fact 1 exhaustive, n=2 and n=3", fact1_exhaustive, 60.0},
      {"worked example (0,2,5)", worked_example_025, 10.0},
      {"end-to-end (0,7,12)(4,5) with optimality", end_to_end_4qubit, 300.0},
      {"one-ancilla gate counts and bounds", one_ancilla_counts, 60.0},
      {"contraction 12 -> 10 gates for (3,6,5)", contraction, 10.0},
      {"round-trip totality, n=2..5", round_trip_totality, 60.0},
      {"factor-count parity equals permutation parity", parity_invariant, 60.0},
      {"simulator semantics of the (4,6) gate", simulator_semantics, 10.0},
      {"minimal-letter scan regression guard (n=10)", scan_regression_guard, 10.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = checks[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (elapsed.count() > checks[i].budget_seconds) {
      ok = false;
      detail += detail.empty() ? "" : "; ";
      detail += "over time budget of " + std::to_string(checks[i].budget_seconds) + " s";
    }
    const char* tag = i < 9 ? "criterion" : "guard";
    const std::size_t number = i < 9 ? i + 1 : i - 8;
    std::printf("%s %zu [%s]: %s (%.2f s)%s%s\n", tag, number,
                checks[i].label.c_str(), ok ? "PASS" : "FAIL", elapsed.count(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("acceptance: %zu/%zu passed\n", checks.size() - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}

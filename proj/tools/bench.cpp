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

// Times the OpenMP kernels against their serial references:
//   - the basis-state sweep behind circuit_to_permutation
//   - the bit-wise minimal letter scan
// Both pairs must agree bit for bit; the bench reports a mismatch loudly.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permsynth/circuit.hpp"
#include "permsynth/decomp.hpp"
#include "permsynth/sim.hpp"

namespace {

using namespace permsynth;
using Clock = std::chrono::steady_clock;

double best_of(int repeats, const auto& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    fn();
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

Circuit random_circuit(int n, int gates, std::mt19937& rng) {
  Circuit c{n, false, {}};
  std::uniform_int_distribution<int> line(0, n - 1);
  std::uniform_int_distribution<int> ctrl_count(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < gates; ++i) {
    const int target = line(rng);
    const int wanted = ctrl_count(rng);
    std::vector<ControlSpec> controls;
    for (int l = 0; l < n && static_cast<int>(controls.size()) < wanted; ++l) {
      if (l != target && coin(rng)) {
        controls.push_back({l, coin(rng) ? Polarity::positive : Polarity::negative});
      }
    }
    if (controls.empty()) {
      controls.push_back({target == 0 ? 1 : 0, Polarity::positive});
    }
    c.gates.push_back(make_gate(target, std::move(controls)));
  }
  return c;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; comparing two serial runs\n");
#endif
  std::printf("%-28s %12s %12s %9s %7s\n", "kernel", "serial [ms]", "openmp [ms]",
              "speedup", "match");

  std::mt19937 rng(20260810);

  {
    const int n = 16;
    const int gates = 1500;
    const Circuit c = random_circuit(n, gates, rng);
    Permutation serial(1), parallel(1);
    const double t_serial =
        best_of(3, [&] { serial = circuit_to_permutation_serial(c); });
    const double t_parallel =
        best_of(3, [&] { parallel = circuit_to_permutation(c); });
    std::printf("%-28s %12.2f %12.2f %8.2fx %7s\n", "basis sweep n=16 G=1500",
                t_serial, t_parallel, t_serial / t_parallel,
                serial == parallel ? "yes" : "NO");
  }

  {
    const int n = 22;
    std::uniform_int_distribution<Letter> letter(0, (Letter{1} << n) - 1);
    std::vector<Letter> support;
    while (support.size() < 8) {
      const Letter x = letter(rng);
      if (std::find(support.begin(), support.end(), x) == support.end()) {
        support.push_back(x);
      }
    }
    MinimalLetter serial{0, 0, false}, parallel{0, 0, false};
    const double t_serial =
        best_of(3, [&] { serial = minimal_letter_scan_serial(support, n); });
    const double t_parallel =
        best_of(3, [&] { parallel = minimal_letter_scan(support, n); });
    const bool match = serial.letter == parallel.letter &&
                       serial.distance == parallel.distance &&
                       serial.in_support == parallel.in_support;
    std::printf("%-28s %12.2f %12.2f %8.2fx %7s\n", "minimal letter n=22 |S|=8",
                t_serial, t_parallel, t_serial / t_parallel, match ? "yes" : "NO");
  }

  return 0;
}

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

#include "permsynth/circuit.hpp"

#include <algorithm>

namespace permsynth {

Gate make_gate(int target, std::vector<ControlSpec> controls) {
  if (target < 0) {
    throw std::invalid_argument("gate target must be non-negative");
  }
  std::sort(controls.begin(), controls.end(),
            [](const ControlSpec& l, const ControlSpec& r) { return l.line < r.line; });
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (controls[i].line < 0) {
      throw std::invalid_argument("control line must be non-negative");
    }
    if (controls[i].line == target) {
      throw std::invalid_argument("a gate cannot control on its own target");
    }
    if (i > 0 && controls[i].line == controls[i - 1].line) {
      throw std::invalid_argument("at most one control per line");
    }
  }
  return Gate{target, std::move(controls)};
}

void validate(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (g.target >= c.lines()) {
      throw std::invalid_argument("gate target outside the circuit");
    }
    for (const ControlSpec& ctrl : g.controls) {
      if (ctrl.line >= c.lines()) {
        throw std::invalid_argument("gate control outside the circuit");
      }
    }
  }
}

namespace {

void check_letters(const TranspositionProduct& factors, int n) {
  const Letter size = Letter{1} << n;
  for (const Transposition& t : factors.factors) {
    if (t.b >= size) {
      throw std::invalid_argument("factor letter out of range for " +
                                  std::to_string(n) + " qubits");
    }
  }
}

// Fully-controlled gate on the register matching the bit pattern of
// `letter`, targeting the ancilla (line n).
Gate pattern_gate(Letter letter, int n) {
  std::vector<ControlSpec> controls;
  controls.reserve(static_cast<std::size_t>(n));
  for (int line = 0; line < n; ++line) {
    const bool bit = (letter >> line) & 1u;
    controls.push_back({line, bit ? Polarity::positive : Polarity::negative});
  }
  return make_gate(n, std::move(controls));
}

}  // namespace

Circuit synth_one_ancilla(const TranspositionProduct& factors, int n) {
  check_letters(factors, n);
  Circuit c{n, true, {}};
  const int ancilla = n;
  // Circuits compose left to right but products evaluate right to left, so
  // the rightmost factor's block comes first.
  for (auto it = factors.factors.rbegin(); it != factors.factors.rend(); ++it) {
    const Gate first = pattern_gate(it->a, n);
    const Gate second = pattern_gate(it->b, n);
    c.gates.push_back(first);
    c.gates.push_back(second);
    const Letter diff = it->a ^ it->b;
    for (int line = 0; line < n; ++line) {
      if ((diff >> line) & 1u) {
        c.gates.push_back(make_gate(line, {{ancilla, Polarity::positive}}));
      }
    }
    c.gates.push_back(first);
    c.gates.push_back(second);
  }
  return c;
}

Circuit synth_no_ancilla(const TranspositionProduct& factors, int n) {
  check_letters(factors, n);
  Circuit c{n, false, {}};
  for (auto it = factors.factors.rbegin(); it != factors.factors.rend(); ++it) {
    const Letter diff = it->a ^ it->b;
    if (hamming(it->a, it->b) != 1) {
      throw std::invalid_argument(
          "factor (" + std::to_string(it->a) + "," + std::to_string(it->b) +
          ") is not bit-wise adjacent; decompose first");
    }
    int target = 0;
    while (!((diff >> target) & 1u)) ++target;
    std::vector<ControlSpec> controls;
    controls.reserve(static_cast<std::size_t>(n) - 1);
    for (int line = 0; line < n; ++line) {
      if (line == target) continue;
      const bool bit = (it->a >> line) & 1u;  // shared bit of both letters
      controls.push_back({line, bit ? Polarity::positive : Polarity::negative});
    }
    c.gates.push_back(make_gate(target, std::move(controls)));
  }
  return c;
}

namespace {

bool targets_ancilla_cleanly(const Gate& g, int ancilla) {
  if (g.target != ancilla) return false;
  for (const ControlSpec& ctrl : g.controls) {
    if (ctrl.line == ancilla) return false;
  }
  return true;
}

// Within a maximal run of ancilla-targeting gates all gates commute, so
// identical pairs cancel regardless of position. Keeps the survivors in
// their original order.
bool cancel_in_ancilla_runs(std::vector<Gate>& gates, int ancilla) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  bool changed = false;
  std::size_t i = 0;
  while (i < gates.size()) {
    if (!targets_ancilla_cleanly(gates[i], ancilla)) {
      out.push_back(std::move(gates[i]));
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < gates.size() && targets_ancilla_cleanly(gates[j], ancilla)) ++j;
    std::vector<bool> dead(j - i, false);
    for (std::size_t a = i; a < j; ++a) {
      if (dead[a - i]) continue;
      for (std::size_t b = a + 1; b < j; ++b) {
        if (!dead[b - i] && gates[a] == gates[b]) {
          dead[a - i] = dead[b - i] = true;
          changed = true;
          break;
        }
      }
    }
    for (std::size_t a = i; a < j; ++a) {
      if (!dead[a - i]) out.push_back(std::move(gates[a]));
    }
    i = j;
  }
  gates = std::move(out);
  return changed;
}

bool cancel_adjacent_identical(std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  bool changed = false;
  for (Gate& g : gates) {
    if (!out.empty() && out.back() == g) {
      out.pop_back();
      changed = true;
    } else {
      out.push_back(std::move(g));
    }
  }
  gates = std::move(out);
  return changed;
}

}  // namespace

Circuit peephole_cancel(const Circuit& c) {
  Circuit result = c;
  bool changed = true;
  while (changed) {
    changed = cancel_adjacent_identical(result.gates);
    if (result.has_ancilla) {
      changed = cancel_in_ancilla_runs(result.gates, result.n) || changed;
    }
  }
  return result;
}

GateCount gate_count(const Circuit& c) {
  GateCount count;
  for (const Gate& g : c.gates) {
    if (g.controls.size() >= 2) {
      ++count.mct;
    } else if (g.controls.size() == 1) {
      ++count.cnot;
    } else {
      ++count.x;
    }
  }
  count.total = count.mct + count.cnot + count.x;
  return count;
}

}  // namespace permsynth

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
#include <vector>

#include "permsynth/perm.hpp"

namespace permsynth {

enum class Polarity : std::uint8_t { negative, positive };

struct ControlSpec {
  int line;
  Polarity polarity;

  auto operator<=>(const ControlSpec&) const = default;
};

/// A multi-controlled X: flips `target` when every control line matches its
/// polarity. Zero controls is a bare X, one control a CNOT. Every gate is
/// its own inverse.
struct Gate {
  int target = 0;
  std::vector<ControlSpec> controls;  // sorted by line

  bool operator==(const Gate&) const = default;
};

/// Sorts the controls by line and validates: no control on the target, no
/// two controls on one line, no negative line indices.
Gate make_gate(int target, std::vector<ControlSpec> controls);

/// An ordered gate list over n register lines (indices 0..n-1) plus an
/// optional ancilla on line n. The leftmost gate applies first.
struct Circuit {
  int n = 0;
  bool has_ancilla = false;
  std::vector<Gate> gates;

  int lines() const { return n + (has_ancilla ? 1 : 0); }

  bool operator==(const Circuit&) const = default;
};

/// Throws std::invalid_argument if any gate references a line outside the
/// circuit. Used to guard circuits loaded from files.
void validate(const Circuit& c);

struct GateCount {
  std::size_t mct = 0;   // gates with >= 2 controls
  std::size_t cnot = 0;  // exactly 1 control
  std::size_t x = 0;     // no controls
  std::size_t total = 0;
};

/// Three-stage block per transposition (I, J), blocks emitted in reverse
/// product order so the rightmost factor acts first:
///   stage 1: two ancilla-targeting gates fully controlled on the bit
///            patterns of I and then J (smaller letter first);
///   stage 2: one ancilla-controlled CNOT per differing bit, targets in
///            increasing line order;
///   stage 3: stage 1 again, returning the ancilla to |0>.
/// Factors need not be bit-adjacent. Uses 4 + hamming(I, J) gates each.
Circuit synth_one_ancilla(const TranspositionProduct& factors, int n);

/// One gate per bit-adjacent factor (I, J): target on the differing bit,
/// controls matching the shared bits of the other n-1 lines. Blocks again
/// in reverse product order. Throws if any factor has Hamming distance > 1.
Circuit synth_no_ancilla(const TranspositionProduct& factors, int n);

/// Cancels identical gate pairs to a fixpoint. Adjacent identical gates
/// always cancel; within a run of consecutive ancilla-targeting gates (none
/// of which control on the ancilla) all gates commute, so identical pairs
/// cancel anywhere in the run. Never changes the realized permutation and
/// never grows the circuit.
Circuit peephole_cancel(const Circuit& c);

GateCount gate_count(const Circuit& c);

}  // namespace permsynth

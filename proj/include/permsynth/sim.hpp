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

#include "permsynth/circuit.hpp"
#include "permsynth/perm.hpp"

namespace permsynth {

/// A computational basis state over the circuit's lines: bit i of the
/// integer is line i.
using BasisState = std::uint32_t;

/// Raised when a circuit with an ancilla maps some ancilla=0 input to an
/// ancilla=1 output; `input()` is the smallest offending register state.
class DirtyAncillaError : public std::runtime_error {
 public:
  explicit DirtyAncillaError(Letter input)
      : std::runtime_error("circuit leaves the ancilla set for input " +
                           std::to_string(input)),
        input_(input) {}

  Letter input() const { return input_; }

 private:
  Letter input_;
};

/// Flips the target bit of s when every control matches; otherwise s.
BasisState apply_gate(BasisState s, const Gate& g);

/// Applies the gates in list order (leftmost first).
BasisState run(const Circuit& c, BasisState s);

/// The permutation of [[2^n]] the circuit realizes, evaluated over the
/// whole ancilla=0 subspace. Throws DirtyAncillaError if any input leaves
/// the ancilla set. Basis states are swept in parallel when OpenMP is
/// enabled; results are bit-identical to the serial sweep.
Permutation circuit_to_permutation(const Circuit& c);

/// Serial reference for circuit_to_permutation.
Permutation circuit_to_permutation_serial(const Circuit& c);

struct VerifyResult {
  bool equal;
  Letter witness;  // smallest mismatching basis state when !equal
};

/// Compares the circuit's realized permutation against p. Propagates
/// DirtyAncillaError.
VerifyResult verify(const Circuit& c, const Permutation& p);

}  // namespace permsynth

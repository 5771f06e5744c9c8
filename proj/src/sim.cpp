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

#include "permsynth/sim.hpp"

#include <limits>
#include <vector>

namespace permsynth {

namespace {

// Mask/value form of a gate: flip `flip` when (s & mask) == want.
struct CompiledGate {
  BasisState mask = 0;
  BasisState want = 0;
  BasisState flip = 0;
};

CompiledGate compile_gate(const Gate& g) {
  CompiledGate cg;
  cg.flip = BasisState{1} << g.target;
  for (const ControlSpec& ctrl : g.controls) {
    cg.mask |= BasisState{1} << ctrl.line;
    if (ctrl.polarity == Polarity::positive) {
      cg.want |= BasisState{1} << ctrl.line;
    }
  }
  return cg;
}

std::vector<CompiledGate> compile(const Circuit& c) {
  validate(c);
  std::vector<CompiledGate> compiled;
  compiled.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    compiled.push_back(compile_gate(g));
  }
  return compiled;
}

inline BasisState run_compiled(const std::vector<CompiledGate>& gates, BasisState s) {
  for (const CompiledGate& g : gates) {
    if ((s & g.mask) == g.want) s ^= g.flip;
  }
  return s;
}

constexpr Letter kClean = std::numeric_limits<Letter>::max();

}  // namespace

BasisState apply_gate(BasisState s, const Gate& g) {
  const CompiledGate cg = compile_gate(g);
  return (s & cg.mask) == cg.want ? s ^ cg.flip : s;
}

BasisState run(const Circuit& c, BasisState s) {
  return run_compiled(compile(c), s);
}

Permutation circuit_to_permutation_serial(const Circuit& c) {
  const std::vector<CompiledGate> gates = compile(c);
  const Letter size = Letter{1} << c.n;
  const BasisState ancilla_bit = c.has_ancilla ? BasisState{1} << c.n : 0;

  std::vector<Letter> image(size);
  for (Letter k = 0; k < size; ++k) {
    const BasisState out = run_compiled(gates, k);
    if (out & ancilla_bit) throw DirtyAncillaError(k);
    image[k] = out;
  }
  return Permutation(c.n, std::move(image));
}

Permutation circuit_to_permutation(const Circuit& c) {
  const std::vector<CompiledGate> gates = compile(c);
  const Letter size = Letter{1} << c.n;
  const BasisState ancilla_bit = c.has_ancilla ? BasisState{1} << c.n : 0;

  std::vector<Letter> image(size);
  Letter dirty = kClean;
#pragma omp parallel for schedule(static) reduction(min : dirty)
  for (long long ki = 0; ki < static_cast<long long>(size); ++ki) {
    const Letter k = static_cast<Letter>(ki);
    const BasisState out = run_compiled(gates, k);
    if (out & ancilla_bit) dirty = std::min(dirty, k);
    image[k] = out;
  }
  if (dirty != kClean) throw DirtyAncillaError(dirty);
  return Permutation(c.n, std::move(image));
}

VerifyResult verify(const Circuit& c, const Permutation& p) {
  if (c.n != p.qubits()) {
    throw std::invalid_argument("circuit and permutation sizes differ");
  }
  const Permutation realized = circuit_to_permutation(c);
  for (Letter k = 0; k < p.size(); ++k) {
    if (realized(k) != p(k)) return {false, k};
  }
  return {true, 0};
}

}  // namespace permsynth

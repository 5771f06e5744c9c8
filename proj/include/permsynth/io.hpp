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
#include <string_view>

#include <json.hpp>

#include "permsynth/circuit.hpp"
#include "permsynth/decomp.hpp"
#include "permsynth/oracle.hpp"

namespace permsynth {

/// Native circuit text, one gate per line:
///
///   QUBITS <n> ANCILLA <0|1>
///   MCX t=<target> c=<line><+|->,<line><+|->,...
///   CX t=<target> c=<line><+|->
///   X t=<target>
///
/// Controls are sorted by line; '+' is a positive control, '-' negative.
std::string circuit_to_native(const Circuit& c);

/// Parses the native format. Unknown gate kinds or malformed lines raise
/// ParseError; line indices are validated against the header.
Circuit circuit_from_native(std::string_view text);

/// QASM-style export. Negative controls are conjugated with x gates; a
/// multi-controlled X stays one named operation with its full control list
/// (ccx for two controls, mcx beyond), never decomposed further.
std::string circuit_to_qasm(const Circuit& c);

nlohmann::json circuit_to_json(const Circuit& c);

/// Accepts a circuit document or any object wrapping one under "circuit".
Circuit circuit_from_json(const nlohmann::json& j);

/// One factor per line "(a,b)" in product order, then a trailer
/// "# strategy=<name> length=<L>".
std::string decomp_report_text(const DecompReport& r);

nlohmann::json decomp_report_json(const DecompReport& r);

nlohmann::json gate_count_json(const GateCount& g);

nlohmann::json oracle_result_json(const OracleResult& r);

}  // namespace permsynth

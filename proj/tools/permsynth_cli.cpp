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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permsynth/circuit.hpp"
#include "permsynth/decomp.hpp"
#include "permsynth/io.hpp"
#include "permsynth/oracle.hpp"
#include "permsynth/perm.hpp"
#include "permsynth/sim.hpp"

namespace {

using namespace permsynth;

// Stable exit codes: 0 ok, 1 input error, 2 internal verification failure,
// 3 circuit/permutation mismatch, 4 dirty ancilla.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;
constexpr int kMismatch = 3;
constexpr int kDirtyAncilla = 4;

int max_n_cap() {
  const char* env = std::getenv("PERMSYNTH_MAX_N");
  if (env == nullptr) return 16;
  try {
    const int cap = std::stoi(env);
    if (cap < 1) throw std::invalid_argument("non-positive");
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument("PERMSYNTH_MAX_N must be a positive integer");
  }
}

void check_cap(int n) {
  const int cap = max_n_cap();
  if (n < 1 || n > cap) {
    throw std::invalid_argument("n must be in [1, " + std::to_string(cap) +
                                "] (raise PERMSYNTH_MAX_N to go higher)");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

Circuit load_circuit(const std::string& path) {
  const std::string text = read_file(path);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return circuit_from_json(nlohmann::json::parse(text));
  }
  return circuit_from_native(text);
}

Strategy parse_strategy(const std::string& name) {
  if (name == "naive") return Strategy::naive;
  if (name == "greedy") return Strategy::greedy;
  if (name == "best") return Strategy::best;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::string render_circuit(const Circuit& c, const std::string& format) {
  if (format == "native") return circuit_to_native(c);
  if (format == "qasm") return circuit_to_qasm(c);
  if (format == "json") return circuit_to_json(c).dump(2) + "\n";
  throw std::invalid_argument("unknown format '" + format + "'");
}

std::string human_summary(const GateCount& count, const DecompReport* report) {
  std::string out = "gates: total=" + std::to_string(count.total) +
                    " mct=" + std::to_string(count.mct) +
                    " cnot=" + std::to_string(count.cnot) +
                    " x=" + std::to_string(count.x) + "\n";
  if (report != nullptr) {
    out += "decomp: strategy=";
    out += strategy_name(report->strategy);
    out += " length=" + std::to_string(report->total_length) + "\n";
    for (const CycleChoice& choice : report->per_cycle) {
      out += "  cycle (";
      for (std::size_t i = 0; i < choice.cycle.letters().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(choice.cycle.letters()[i]);
      }
      out += "): ";
      switch (choice.kind) {
        case CycleChoice::Kind::direct: out += "direct"; break;
        case CycleChoice::Kind::internal: out += "internal"; break;
        case CycleChoice::Kind::external: out += "external"; break;
      }
      if (choice.anchor) out += " anchor=" + std::to_string(*choice.anchor);
      out += " factors=" + std::to_string(choice.factor_count) + "\n";
    }
  }
  return out;
}

struct SynthOptions {
  int n = 0;
  std::string perm;
  std::string method;
  std::string strategy = "greedy";
  std::string format = "native";
  std::string output;
  bool peephole = false;
  bool no_verify = false;
};

int run_synth(const SynthOptions& opt) {
  check_cap(opt.n);
  const Permutation p = parse_permutation(opt.perm, opt.n);

  Circuit circuit;
  std::optional<DecompReport> report;
  if (opt.method == "one-ancilla") {
    circuit = synth_one_ancilla(chain_transpositions(p), opt.n);
  } else {
    report = reduce(p, parse_strategy(opt.strategy));
    circuit = synth_no_ancilla(report->factors, opt.n);
  }
  if (opt.peephole) circuit = peephole_cancel(circuit);

  if (!opt.no_verify) {
    try {
      const VerifyResult check = verify(circuit, p);
      if (!check.equal) {
        std::cerr << "internal error: synthesized circuit mismatches at basis state "
                  << check.witness << "\n";
        return kInternalError;
      }
    } catch (const DirtyAncillaError& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return kInternalError;
    }
  }

  const GateCount count = gate_count(circuit);
  if (opt.format == "json") {
    nlohmann::json doc;
    doc["gate_count"] = gate_count_json(count);
    if (report) doc["decomp"] = decomp_report_json(*report);
    if (opt.output.empty()) {
      doc["circuit"] = circuit_to_json(circuit);
      std::cout << doc.dump(2) << "\n";
    } else {
      write_output(opt.output, circuit_to_json(circuit).dump(2) + "\n");
      std::cout << doc.dump(2) << "\n";
    }
    return kOk;
  }

  const std::string summary =
      human_summary(count, report ? &*report : nullptr);
  write_output(opt.output, render_circuit(circuit, opt.format));
  // Keep stdout machine-clean when the circuit itself goes there.
  (opt.output.empty() ? std::cerr : std::cout) << summary;
  return kOk;
}

struct DecompOptions {
  int n = 0;
  std::string perm;
  std::string strategy = "greedy";
  std::string format = "native";
  std::string output;
};

int run_decomp(const DecompOptions& opt) {
  check_cap(opt.n);
  const Permutation p = parse_permutation(opt.perm, opt.n);
  const DecompReport report = reduce(p, parse_strategy(opt.strategy));
  if (opt.format == "json") {
    write_output(opt.output, decomp_report_json(report).dump(2) + "\n");
  } else {
    write_output(opt.output, decomp_report_text(report));
  }
  return kOk;
}

int run_verify(const std::string& circuit_path, const std::string& perm_text) {
  const Circuit circuit = load_circuit(circuit_path);
  check_cap(circuit.n);
  const Permutation p = parse_permutation(perm_text, circuit.n);
  const VerifyResult result = verify(circuit, p);
  if (!result.equal) {
    std::cout << "mismatch at basis state " << result.witness << "\n";
    return kMismatch;
  }
  std::cout << "equal\n";
  return kOk;
}

struct CountOptions {
  std::string circuit_path;
  int n = 0;
  std::string perm;
  std::string method = "no-ancilla";
  std::string strategy = "greedy";
  std::string format = "native";
};

int run_count(const CountOptions& opt) {
  Circuit circuit;
  if (!opt.circuit_path.empty()) {
    circuit = load_circuit(opt.circuit_path);
    check_cap(circuit.n);
  } else {
    if (opt.n == 0) {
      throw std::invalid_argument("count needs --circuit or --n with --perm");
    }
    check_cap(opt.n);
    const Permutation p = parse_permutation(opt.perm, opt.n);
    circuit = opt.method == "one-ancilla"
                  ? synth_one_ancilla(chain_transpositions(p), opt.n)
                  : synth_no_ancilla(reduce(p, parse_strategy(opt.strategy)).factors,
                                     opt.n);
  }
  const GateCount count = gate_count(circuit);
  if (opt.format == "json") {
    std::cout << gate_count_json(count).dump(2) << "\n";
  } else {
    std::cout << human_summary(count, nullptr);
  }
  return kOk;
}

int run_oracle(int n, const std::string& perm, int max_depth,
               const std::string& format) {
  check_cap(n);
  const Permutation p = parse_permutation(perm, n);
  const OracleResult result = minimal_length(p, max_depth);
  if (format == "json") {
    std::cout << oracle_result_json(result).dump(2) << "\n";
  } else {
    std::cout << result.str() << "\n";
  }
  return kOk;
}

int run_matrix(int n, const std::string& perm, const std::string& format) {
  check_cap(n);
  const Permutation p = parse_permutation(perm, n);
  const auto m = matrix_view(p);
  if (format == "json") {
    std::cout << nlohmann::json({{"n", n}, {"matrix", m}}).dump(2) << "\n";
  } else {
    for (const auto& row : m) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        std::cout << (c ? " " : "") << int(row[c]);
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesizes multi-controlled Toffoli circuits realizing"
               " permutations of the n-qubit computational basis."};
  app.require_subcommand(1);

  const std::map<std::string, std::string> format_help = {
      {"native", "native gate list"}, {"qasm", "QASM-style"}, {"json", "JSON"}};
  const auto format_check = CLI::IsMember({"native", "qasm", "json"});
  const auto method_check = CLI::IsMember({"one-ancilla", "no-ancilla"});
  const auto strategy_check = CLI::IsMember({"naive", "greedy", "best"});

  SynthOptions synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Synthesize a circuit for a permutation");
  synth_cmd->add_option("--n", synth.n, "register qubit count")->required();
  synth_cmd->add_option("--perm", synth.perm,
                        "permutation, cycle or one-line notation");
  synth_cmd->add_option("--method", synth.method, "one-ancilla | no-ancilla")
      ->required()
      ->check(method_check);
  synth_cmd->add_option("--strategy", synth.strategy,
                        "decomposition strategy (no-ancilla only)")
      ->check(strategy_check);
  synth_cmd->add_option("--format", synth.format, "output format")->check(format_check);
  synth_cmd->add_option("-o,--output", synth.output, "write the circuit here");
  synth_cmd->add_flag("--peephole", synth.peephole, "contract identical gate pairs");
  synth_cmd->add_flag("--no-verify", synth.no_verify,
                      "skip the built-in simulation check");

  DecompOptions decomp;
  CLI::App* decomp_cmd =
      app.add_subcommand("decomp", "Print a bit-wise adjacent decomposition");
  decomp_cmd->add_option("--n", decomp.n, "register qubit count")->required();
  decomp_cmd->add_option("--perm", decomp.perm, "permutation text");
  decomp_cmd->add_option("--strategy", decomp.strategy, "naive | greedy | best")
      ->check(strategy_check);
  decomp_cmd->add_option("--format", decomp.format, "output format")
      ->check(format_check);
  decomp_cmd->add_option("-o,--output", decomp.output, "write the listing here");

  std::string verify_circuit;
  std::string verify_perm;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a circuit file against a permutation");
  verify_cmd->add_option("--circuit", verify_circuit, "circuit file (native or json)")
      ->required();
  verify_cmd->add_option("--perm", verify_perm, "permutation text")->required();

  CountOptions count;
  CLI::App* count_cmd = app.add_subcommand("count", "Report gate counts");
  count_cmd->add_option("--circuit", count.circuit_path, "circuit file");
  count_cmd->add_option("--n", count.n, "register qubit count");
  count_cmd->add_option("--perm", count.perm, "permutation text");
  count_cmd->add_option("--method", count.method, "one-ancilla | no-ancilla")
      ->check(method_check);
  count_cmd->add_option("--strategy", count.strategy, "decomposition strategy")
      ->check(strategy_check);
  count_cmd->add_option("--format", count.format, "output format")->check(format_check);

  int oracle_n = 0;
  std::string oracle_perm;
  int oracle_depth = 9;
  std::string oracle_format = "native";
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Exact minimal decomposition length (n <= 4)");
  oracle_cmd->add_option("--n", oracle_n, "register qubit count")->required();
  oracle_cmd->add_option("--perm", oracle_perm, "permutation text");
  oracle_cmd->add_option("--max-depth", oracle_depth, "search budget (default 9)");
  oracle_cmd->add_option("--format", oracle_format, "output format")
      ->check(format_check);

  int matrix_n = 0;
  std::string matrix_perm;
  std::string matrix_format = "native";
  CLI::App* matrix_cmd =
      app.add_subcommand("matrix", "Print the permutation matrix (n <= 6)");
  matrix_cmd->add_option("--n", matrix_n, "register qubit count")->required();
  matrix_cmd->add_option("--perm", matrix_perm, "permutation text");
  matrix_cmd->add_option("--format", matrix_format, "output format")
      ->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (synth_cmd->parsed()) return run_synth(synth);
    if (decomp_cmd->parsed()) return run_decomp(decomp);
    if (verify_cmd->parsed()) return run_verify(verify_circuit, verify_perm);
    if (count_cmd->parsed()) return run_count(count);
    if (oracle_cmd->parsed()) return run_oracle(oracle_n, oracle_perm, oracle_depth,
                                                oracle_format);
    if (matrix_cmd->parsed()) return run_matrix(matrix_n, matrix_perm, matrix_format);
  } catch (const DirtyAncillaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDirtyAncilla;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInputError;
}

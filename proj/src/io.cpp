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

#include "permsynth/io.hpp"

#include <cctype>
#include <sstream>

namespace permsynth {

namespace {

char polarity_char(Polarity p) {
  return p == Polarity::positive ? '+' : '-';
}

std::string control_list(const Gate& g) {
  std::string out;
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.controls[i].line);
    out += polarity_char(g.controls[i].polarity);
  }
  return out;
}

}  // namespace

std::string circuit_to_native(const Circuit& c) {
  std::string out = "QUBITS " + std::to_string(c.n) + " ANCILLA " +
                    (c.has_ancilla ? "1" : "0") + "\n";
  for (const Gate& g : c.gates) {
    if (g.controls.empty()) {
      out += "X t=" + std::to_string(g.target) + "\n";
    } else if (g.controls.size() == 1) {
      out += "CX t=" + std::to_string(g.target) + " c=" + control_list(g) + "\n";
    } else {
      out += "MCX t=" + std::to_string(g.target) + " c=" + control_list(g) + "\n";
    }
  }
  return out;
}

namespace {

struct LineLexer {
  std::string_view line;
  std::size_t pos = 0;
  int number() {
    if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos]))) {
      throw ParseError("expected a number in '" + std::string(line) + "'");
    }
    long v = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
      v = v * 10 + (line[pos] - '0');
      if (v > 1'000'000) throw ParseError("line index out of range");
      ++pos;
    }
    return static_cast<int>(v);
  }
  void expect(std::string_view token) {
    if (line.substr(pos, token.size()) != token) {
      throw ParseError("expected '" + std::string(token) + "' in '" +
                       std::string(line) + "'");
    }
    pos += token.size();
  }
  bool eat(char ch) {
    if (pos < line.size() && line[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  bool done() const { return pos == line.size(); }
};

Polarity parse_polarity(LineLexer& lex) {
  if (lex.eat('+')) return Polarity::positive;
  if (lex.eat('-')) return Polarity::negative;
  throw ParseError("expected control polarity '+' or '-'");
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Circuit circuit_from_native(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  Circuit c;
  bool have_header = false;
  while (std::getline(in, raw)) {
    const std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    LineLexer lex{line};
    if (!have_header) {
      lex.expect("QUBITS ");
      c.n = lex.number();
      if (c.n < 1 || c.n > kMaxQubits) throw ParseError("unsupported qubit count");
      lex.expect(" ANCILLA ");
      const int flag = lex.number();
      if (flag != 0 && flag != 1) throw ParseError("ANCILLA must be 0 or 1");
      c.has_ancilla = flag == 1;
      if (!lex.done()) throw ParseError("trailing input after header");
      have_header = true;
      continue;
    }
    std::vector<ControlSpec> controls;
    bool want_controls = true;
    if (line.rfind("MCX ", 0) == 0) {
      lex.expect("MCX ");
    } else if (line.rfind("CX ", 0) == 0) {
      lex.expect("CX ");
    } else if (line.rfind("X ", 0) == 0) {
      lex.expect("X ");
      want_controls = false;
    } else {
      throw ParseError("unknown gate kind in '" + line + "'");
    }
    lex.expect("t=");
    const int target = lex.number();
    if (want_controls) {
      lex.expect(" c=");
      controls.push_back({lex.number(), parse_polarity(lex)});
      while (lex.eat(',')) {
        controls.push_back({lex.number(), parse_polarity(lex)});
      }
    }
    if (!lex.done()) throw ParseError("trailing input in '" + line + "'");
    if (line[0] == 'C' && controls.size() != 1) {
      throw ParseError("CX takes exactly one control");
    }
    if (line[0] == 'M' && controls.size() < 2) {
      throw ParseError("MCX takes at least two controls");
    }
    try {
      c.gates.push_back(make_gate(target, std::move(controls)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (!have_header) throw ParseError("missing QUBITS header");
  try {
    validate(c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

std::string circuit_to_qasm(const Circuit& c) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.lines()) + "];\n";
  for (const Gate& g : c.gates) {
    std::string flips;
    for (const ControlSpec& ctrl : g.controls) {
      if (ctrl.polarity == Polarity::negative) {
        flips += "x q[" + std::to_string(ctrl.line) + "];\n";
      }
    }
    out += flips;
    if (g.controls.empty()) {
      out += "x q[" + std::to_string(g.target) + "];\n";
    } else {
      if (g.controls.size() == 1) {
        out += "cx ";
      } else if (g.controls.size() == 2) {
        out += "ccx ";
      } else {
        out += "mcx ";
      }
      for (const ControlSpec& ctrl : g.controls) {
        out += "q[" + std::to_string(ctrl.line) + "],";
      }
      out += "q[" + std::to_string(g.target) + "];\n";
    }
    out += flips;
  }
  return out;
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    nlohmann::json controls = nlohmann::json::array();
    for (const ControlSpec& ctrl : g.controls) {
      controls.push_back({{"line", ctrl.line},
                          {"polarity", std::string(1, polarity_char(ctrl.polarity))}});
    }
    gates.push_back({{"target", g.target}, {"controls", std::move(controls)}});
  }
  return {{"format", "permsynth-circuit"},
          {"qubits", c.n},
          {"ancilla", c.has_ancilla},
          {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  const nlohmann::json& j = doc.contains("circuit") ? doc.at("circuit") : doc;
  try {
    Circuit c;
    c.n = j.at("qubits").get<int>();
    c.has_ancilla = j.at("ancilla").get<bool>();
    if (c.n < 1 || c.n > kMaxQubits) throw ParseError("unsupported qubit count");
    for (const nlohmann::json& jg : j.at("gates")) {
      std::vector<ControlSpec> controls;
      for (const nlohmann::json& jc : jg.at("controls")) {
        const std::string pol = jc.at("polarity").get<std::string>();
        if (pol != "+" && pol != "-") throw ParseError("polarity must be + or -");
        controls.push_back(
            {jc.at("line").get<int>(),
             pol == "+" ? Polarity::positive : Polarity::negative});
      }
      c.gates.push_back(make_gate(jg.at("target").get<int>(), std::move(controls)));
    }
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad circuit document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string decomp_report_text(const DecompReport& r) {
  std::string out;
  for (const Transposition& t : r.factors.factors) {
    out += "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")\n";
  }
  out += "# strategy=";
  out += strategy_name(r.strategy);
  out += " length=" + std::to_string(r.total_length) + "\n";
  return out;
}

namespace {

nlohmann::json factors_json(const TranspositionProduct& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Transposition& t : p.factors) {
    arr.push_back({t.a, t.b});
  }
  return arr;
}

const char* choice_name(CycleChoice::Kind k) {
  switch (k) {
    case CycleChoice::Kind::direct: return "direct";
    case CycleChoice::Kind::internal: return "internal";
    case CycleChoice::Kind::external: return "external";
  }
  return "?";
}

}  // namespace

nlohmann::json decomp_report_json(const DecompReport& r) {
  nlohmann::json per_cycle = nlohmann::json::array();
  for (const CycleChoice& choice : r.per_cycle) {
    nlohmann::json entry = {{"cycle", choice.cycle.letters()},
                            {"kind", choice_name(choice.kind)},
                            {"factors", choice.factor_count}};
    if (choice.anchor) entry["anchor"] = *choice.anchor;
    per_cycle.push_back(std::move(entry));
  }
  return {{"strategy", strategy_name(r.strategy)},
          {"length", r.total_length},
          {"factors", factors_json(r.factors)},
          {"per_cycle", std::move(per_cycle)}};
}

nlohmann::json gate_count_json(const GateCount& g) {
  return {{"mct", g.mct}, {"cnot", g.cnot}, {"x", g.x}, {"total", g.total}};
}

nlohmann::json oracle_result_json(const OracleResult& r) {
  nlohmann::json j = {{"length", r.length}, {"exhausted", r.exhausted}};
  j["witness"] = r.exhausted ? factors_json(r.witness) : nlohmann::json();
  return j;
}

}  // namespace permsynth

// Copyright 2026 The qroute Authors
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

#include "qroute/qasm.hpp"

#include <cstdio>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace qroute {

namespace {

std::string format_angle(Angle a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a.radians());
  return buf;
}

bool hardware_kind(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::SX:
    case GateKind::SXdg:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Rz:
    case GateKind::CX:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string to_qasm(const Circuit& c, bool logical) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << c.width() << "];\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    if (!logical && !hardware_kind(g.kind)) {
      throw QasmError("gate " + std::to_string(i) + " (" + g.to_string() +
                      ") is not in the hardware basis; export with --logical");
    }
    os << gate_name(g.kind);
    if (is_parametric(g.kind)) os << "(" << format_angle(g.angle) << ")";
    os << " q[" << g.wires[0] << "]";
    if (g.arity() == 2) os << ",q[" << g.wires[1] << "]";
    os << ";\n";
  }
  return os.str();
}

Circuit parse_qasm(std::string_view text) {
  static const std::map<std::string, GateKind, std::less<>> kinds = {
      {"h", GateKind::H},     {"x", GateKind::X},       {"sx", GateKind::SX},
      {"sxdg", GateKind::SXdg}, {"s", GateKind::S},     {"sdg", GateKind::Sdg},
      {"rz", GateKind::Rz},   {"ry", GateKind::Ry},     {"cx", GateKind::CX},
      {"crz", GateKind::CRz}, {"cp", GateKind::CP},     {"swap", GateKind::Swap}};
  static const std::regex qreg_re(R"(^qreg\s+(\w+)\s*\[\s*(\d+)\s*\]\s*;$)");
  static const std::regex gate_re(
      R"(^([a-z]+)\s*(?:\(\s*([-+0-9.eE]+)\s*\))?\s+\w+\s*\[\s*(\d+)\s*\]\s*(?:,\s*\w+\s*\[\s*(\d+)\s*\])?\s*;$)");

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> width;
  std::vector<Gate> gates;
  bool logical = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto c = line.find("//"); c != std::string::npos) line.erase(c);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
    auto fail = [&](const std::string& what) {
      return QasmError("qasm line " + std::to_string(line_no) + ": " + what);
    };
    std::smatch m;
    if (std::regex_match(line, m, qreg_re)) {
      if (width) throw fail("only one qreg is supported");
      width = std::stoul(m[2]);
      continue;
    }
    if (!std::regex_match(line, m, gate_re)) throw fail("cannot parse '" + line + "'");
    if (!width) throw fail("gate before qreg");
    auto it = kinds.find(m[1].str());
    if (it == kinds.end()) throw fail("unknown gate '" + m[1].str() + "'");
    Gate g{it->second, {std::stoul(m[3]), 0}, {}};
    if (is_parametric(g.kind) != m[2].matched) throw fail("wrong parameter count");
    if (m[2].matched) g.angle = Angle(std::stod(m[2]));
    if (is_two_qubit(g.kind) != m[4].matched) throw fail("wrong operand count");
    if (m[4].matched) g.wires[1] = std::stoul(m[4]);
    for (std::size_t k = 0; k < g.arity(); ++k) {
      if (g.wires[k] >= *width) throw fail("qubit index out of range");
    }
    logical = logical || !hardware_kind(g.kind);
    gates.push_back(g);
  }
  if (!width) throw QasmError("missing qreg declaration");
  return Circuit(*width, std::move(gates), logical ? Space::Logical : Space::Physical);
}

}  // namespace qroute

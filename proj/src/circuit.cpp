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

#include "qroute/circuit.hpp"

#include <sstream>
#include <stdexcept>

#include "qroute/topology.hpp"

namespace qroute {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::SXdg: return "sxdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::Rz: return "rz";
    case GateKind::Ry: return "ry";
    case GateKind::CX: return "cx";
    case GateKind::CRz: return "crz";
    case GateKind::CP: return "cp";
    case GateKind::Swap: return "swap";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CRz ||
         kind == GateKind::CP || kind == GateKind::Swap;
}

bool is_parametric(GateKind kind) {
  return kind == GateKind::Rz || kind == GateKind::Ry ||
         kind == GateKind::CRz || kind == GateKind::CP;
}

bool is_logical_only(GateKind kind) {
  return kind == GateKind::CRz || kind == GateKind::CP ||
         kind == GateKind::Swap;
}

bool Gate::touches(Qubit q) const {
  return wires[0] == q || (arity() == 2 && wires[1] == q);
}

bool Gate::shares_wire(const Gate& other) const {
  for (std::size_t i = 0; i < arity(); ++i) {
    if (other.touches(wires[i])) return true;
  }
  return false;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::SX: g.kind = GateKind::SXdg; break;
    case GateKind::SXdg: g.kind = GateKind::SX; break;
    case GateKind::S: g.kind = GateKind::Sdg; break;
    case GateKind::Sdg: g.kind = GateKind::S; break;
    case GateKind::Rz:
    case GateKind::Ry:
    case GateKind::CRz:
    case GateKind::CP: g.angle = -angle; break;
    default: break;
  }
  return g;
}

bool Gate::approx_equal(const Gate& other, double tol) const {
  if (kind != other.kind || wires[0] != other.wires[0]) return false;
  if (arity() == 2 && wires[1] != other.wires[1]) return false;
  return !is_parametric(kind) || angle.approx_equal(other.angle, tol);
}

std::string Gate::to_string() const {
  std::ostringstream os;
  os << gate_name(kind);
  if (is_parametric(kind)) os << "(" << angle.radians() << ")";
  os << " " << wires[0];
  if (arity() == 2) os << "," << wires[1];
  return os.str();
}

std::size_t cnot_count(const std::vector<Gate>& gates) {
  std::size_t n = 0;
  for (const Gate& g : gates) n += g.kind == GateKind::CX ? 1 : 0;
  return n;
}

std::size_t cnot_count(const Circuit& c) { return cnot_count(c.gates()); }

Circuit inverse(const Circuit& c) {
  std::vector<Gate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    gates.push_back(it->inverse());
    // CRz has period 4 pi, so the canonical negated angle is off by a Z on
    // the control; Rz(pi) restores it up to global phase.
    if (it->kind == GateKind::CRz && !it->angle.is_zero()) gates.push_back(Gate::rz(it->wires[0], kPi));
  }
  return Circuit(c.width(), std::move(gates), c.space());
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("compose: width mismatch");
  }
  Circuit out = a;
  out.append(b);
  return out;
}

bool same_gates(const Circuit& a, const Circuit& b, double tol) {
  if (a.size() != b.size() || a.width() != b.width()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.gates()[i].approx_equal(b.gates()[i], tol)) return false;
  }
  return true;
}

std::vector<Violation> validate(const Circuit& c, const CouplingGraph* graph) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    bool in_range = true;
    for (std::size_t k = 0; k < g.arity(); ++k) {
      if (g.wires[k] >= c.width()) {
        out.push_back({i, "gate " + std::to_string(i) + " (" + g.to_string() +
                              "): wire " + std::to_string(g.wires[k]) +
                              " out of range for width " +
                              std::to_string(c.width())});
        in_range = false;
      }
    }
    if (g.arity() == 2 && g.wires[0] == g.wires[1]) {
      out.push_back({i, "gate " + std::to_string(i) + " (" + g.to_string() +
                            "): repeated wire"});
      continue;
    }
    if (c.space() != Space::Physical) continue;
    if (is_logical_only(g.kind)) {
      out.push_back({i, "gate " + std::to_string(i) + " (" + g.to_string() +
                            "): logical-only kind in physical circuit"});
    }
    if (graph != nullptr && in_range && g.arity() == 2 &&
        !graph->adjacent(g.wires[0], g.wires[1])) {
      out.push_back({i, "gate " + std::to_string(i) + " (" + g.to_string() +
                            "): qubits not adjacent in coupling graph"});
    }
  }
  return out;
}

}  // namespace qroute

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

#include "qroute/rewrite.hpp"

#include <list>

namespace qroute {

namespace {

void push_rz(std::vector<Gate>& out, Qubit q, double radians) {
  Angle a(radians);
  if (!a.is_zero()) out.push_back(Gate::rz(q, a));
}

// True half-angle of a canonical angle. Halving the canonical value keeps
// Rz(theta/2) Rz(theta/2) == Rz(theta) exactly for theta in [0, 2*pi).
double half(Angle a) { return a.radians() / 2.0; }

bool same_pair(const Gate& a, const Gate& b) {
  return a.wires[0] == b.wires[0] && a.wires[1] == b.wires[1];
}

bool same_unordered_pair(const Gate& a, const Gate& b) {
  return same_pair(a, b) || (a.wires[0] == b.wires[1] && a.wires[1] == b.wires[0]);
}

}  // namespace

std::vector<Gate> decompose_crz(Qubit control, Qubit target, Angle theta) {
  std::vector<Gate> out;
  push_rz(out, target, half(theta));
  out.push_back(Gate::cx(control, target));
  push_rz(out, target, -half(theta));
  out.push_back(Gate::cx(control, target));
  return out;
}

std::vector<Gate> decompose_swap(Qubit a, Qubit b) {
  return {Gate::cx(a, b), Gate::cx(b, a), Gate::cx(a, b)};
}

std::vector<Gate> fuse_crz_swap(Qubit control, Qubit target, Angle theta) {
  std::vector<Gate> out;
  push_rz(out, target, half(theta));
  out.push_back(Gate::cx(control, target));
  push_rz(out, target, -half(theta));
  out.push_back(Gate::cx(target, control));
  out.push_back(Gate::cx(control, target));
  return out;
}

std::vector<Gate> fuse_cp_swap(Qubit control, Qubit target, Angle theta) {
  std::vector<Gate> out;
  push_rz(out, control, half(theta));
  auto rest = fuse_crz_swap(control, target, theta);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Gate> decompose_cp(Qubit control, Qubit target, Angle theta) {
  std::vector<Gate> out;
  push_rz(out, control, half(theta));
  auto rest = decompose_crz(control, target, theta);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::optional<CrzMerge> try_merge_crz(const Gate& a, const Gate& b) {
  if (a.kind != GateKind::CRz || b.kind != GateKind::CRz || !same_pair(a, b)) {
    return std::nullopt;
  }
  const double sum = a.angle.radians() + b.angle.radians();
  return CrzMerge{Gate::crz(a.wires[0], a.wires[1], Angle(sum)), sum >= kTwoPi};
}

namespace {

using GateList = std::list<Gate>;

// Next gate after `it` sharing a wire with it, or end.
GateList::iterator next_touching(GateList& gates, GateList::iterator it) {
  for (auto j = std::next(it); j != gates.end(); ++j) {
    if (j->shares_wire(*it)) return j;
  }
  return gates.end();
}

}  // namespace

Circuit cancel_cx_pairs(const Circuit& c) {
  GateList gates(c.gates().begin(), c.gates().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = gates.begin(); it != gates.end();) {
      if (it->kind == GateKind::CX) {
        auto j = next_touching(gates, it);
        if (j != gates.end() && j->kind == GateKind::CX && same_pair(*it, *j)) {
          gates.erase(j);
          it = gates.erase(it);
          changed = true;
          continue;
        }
      }
      ++it;
    }
  }
  return Circuit(c.width(), {gates.begin(), gates.end()}, c.space());
}

Circuit merge_adjacent_crz(const Circuit& c) {
  GateList gates(c.gates().begin(), c.gates().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = gates.begin(); it != gates.end(); ++it) {
      if (it->kind != GateKind::CRz) continue;
      auto j = next_touching(gates, it);
      if (j == gates.end()) continue;
      auto m = try_merge_crz(*it, *j);
      if (!m) continue;
      gates.erase(j);
      *it = m->merged;
      if (m->wrapped) gates.insert(it, Gate::rz(it->wires[0], kPi));
      changed = true;
    }
  }
  return Circuit(c.width(), {gates.begin(), gates.end()}, c.space());
}

std::vector<Gate> lower_to_hardware(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  auto append = [&out](const std::vector<Gate>& gs) {
    out.insert(out.end(), gs.begin(), gs.end());
  };
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const bool swap_follows = i + 1 < gates.size() &&
                              gates[i + 1].kind == GateKind::Swap &&
                              same_unordered_pair(g, gates[i + 1]);
    switch (g.kind) {
      case GateKind::CRz:
        if (swap_follows) {
          append(fuse_crz_swap(g.wires[0], g.wires[1], g.angle));
          ++i;
        } else {
          append(decompose_crz(g.wires[0], g.wires[1], g.angle));
        }
        break;
      case GateKind::CP:
        if (swap_follows) {
          append(fuse_cp_swap(g.wires[0], g.wires[1], g.angle));
          ++i;
        } else {
          append(decompose_cp(g.wires[0], g.wires[1], g.angle));
        }
        break;
      case GateKind::Swap:
        append(decompose_swap(g.wires[0], g.wires[1]));
        break;
      default:
        out.push_back(g);
    }
  }
  return out;
}

Circuit lower_to_hardware(const Circuit& c) {
  return Circuit(c.width(), lower_to_hardware(c.gates()), Space::Physical);
}

}  // namespace qroute

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

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qroute/angle.hpp"

namespace qroute {

class CouplingGraph;

using Qubit = std::size_t;

/// Logical qubit index -> physical position.
using Layout = std::vector<Qubit>;

enum class GateKind { H, X, SX, SXdg, S, Sdg, Rz, Ry, CX, CRz, CP, Swap };

[[nodiscard]] std::string_view gate_name(GateKind kind);
[[nodiscard]] bool is_two_qubit(GateKind kind);
[[nodiscard]] bool is_parametric(GateKind kind);
/// CRz, CP and SWAP must be lowered before a circuit can run on hardware.
[[nodiscard]] bool is_logical_only(GateKind kind);

/**
 * One gate. Two-qubit kinds store (control, target) in wires[0], wires[1];
 * SWAP is symmetric. Parameterless kinds keep a zero angle.
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::array<Qubit, 2> wires{};
  Angle angle{};

  [[nodiscard]] std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }
  [[nodiscard]] bool touches(Qubit q) const;
  [[nodiscard]] bool shares_wire(const Gate& other) const;
  [[nodiscard]] Gate inverse() const;
  [[nodiscard]] bool approx_equal(const Gate& other,
                                  double tol = kAngleTolerance) const;
  [[nodiscard]] std::string to_string() const;

  static Gate h(Qubit q) { return {GateKind::H, {q, 0}, {}}; }
  static Gate x(Qubit q) { return {GateKind::X, {q, 0}, {}}; }
  static Gate sx(Qubit q) { return {GateKind::SX, {q, 0}, {}}; }
  static Gate sxdg(Qubit q) { return {GateKind::SXdg, {q, 0}, {}}; }
  static Gate s(Qubit q) { return {GateKind::S, {q, 0}, {}}; }
  static Gate sdg(Qubit q) { return {GateKind::Sdg, {q, 0}, {}}; }
  static Gate rz(Qubit q, Angle a) { return {GateKind::Rz, {q, 0}, a}; }
  static Gate rz(Qubit q, double a) { return rz(q, Angle(a)); }
  static Gate ry(Qubit q, Angle a) { return {GateKind::Ry, {q, 0}, a}; }
  static Gate ry(Qubit q, double a) { return ry(q, Angle(a)); }
  static Gate cx(Qubit c, Qubit t) { return {GateKind::CX, {c, t}, {}}; }
  static Gate crz(Qubit c, Qubit t, Angle a) { return {GateKind::CRz, {c, t}, a}; }
  static Gate crz(Qubit c, Qubit t, double a) { return crz(c, t, Angle(a)); }
  static Gate cp(Qubit c, Qubit t, Angle a) { return {GateKind::CP, {c, t}, a}; }
  static Gate cp(Qubit c, Qubit t, double a) { return cp(c, t, Angle(a)); }
  static Gate swap(Qubit a, Qubit b) { return {GateKind::Swap, {a, b}, {}}; }
};

enum class Space { Logical, Physical };

/**
 * An ordered gate list over `width` wires.
 *
 * Construction never throws on bad wires: `validate` reports them as data so
 * broken circuits can still be inspected. Builders append, everything else
 * treats a finished circuit as a value.
 */
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width, Space space = Space::Logical)
      : width_(width), space_(space) {}
  Circuit(std::size_t width, std::vector<Gate> gates,
          Space space = Space::Logical)
      : width_(width), space_(space), gates_(std::move(gates)) {}

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] Space space() const { return space_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }

  Circuit& append(const Gate& g) {
    gates_.push_back(g);
    return *this;
  }
  Circuit& append(const std::vector<Gate>& gs) {
    gates_.insert(gates_.end(), gs.begin(), gs.end());
    return *this;
  }
  Circuit& append(const Circuit& other) { return append(other.gates()); }

  [[nodiscard]] Circuit with_space(Space s) const {
    Circuit c = *this;
    c.space_ = s;
    return c;
  }

 private:
  std::size_t width_ = 0;
  Space space_ = Space::Logical;
  std::vector<Gate> gates_;
};

[[nodiscard]] std::size_t cnot_count(const Circuit& c);
[[nodiscard]] std::size_t cnot_count(const std::vector<Gate>& gates);

/// Reversed gate order, each gate inverted. A CRz with a nonzero angle is
/// followed by Rz(pi) on its control, so the result is exact up to global
/// phase (Gate::inverse alone is off by a Z on the control for CRz).
[[nodiscard]] Circuit inverse(const Circuit& c);

/// Concatenation; widths must agree.
[[nodiscard]] Circuit compose(const Circuit& a, const Circuit& b);

/// Gate-by-gate comparison with angle tolerance.
[[nodiscard]] bool same_gates(const Circuit& a, const Circuit& b,
                              double tol = kAngleTolerance);

struct Violation {
  std::size_t gate_index;
  std::string message;
};

/**
 * Type-invariant check. With a graph, a physical circuit must also keep every
 * two-qubit gate on an edge and contain no logical-only kinds.
 */
[[nodiscard]] std::vector<Violation> validate(
    const Circuit& c, const CouplingGraph* graph = nullptr);

}  // namespace qroute

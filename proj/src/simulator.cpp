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

#include "qroute/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace qroute {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex rz_phase(double theta, int bit) {
  return std::exp(kI * (bit ? theta / 2.0 : -theta / 2.0));
}

}  // namespace

StateVector::StateVector(std::size_t n, std::size_t basis_index)
    : n_(n), amps_(std::size_t{1} << n, Complex{}) {
  if (basis_index >= amps_.size()) throw SimulationError("basis index out of range");
  amps_[basis_index] = 1.0;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply_1q(Qubit q, const Complex (&m)[2][2]) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amps_[i], a1 = amps_[i | bit];
    amps_[i] = m[0][0] * a0 + m[0][1] * a1;
    amps_[i | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void StateVector::apply_2q(Qubit w0, Qubit w1, const Complex (&m)[4][4]) {
  const std::size_t b0 = std::size_t{1} << w0, b1 = std::size_t{1} << w1;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & (b0 | b1)) continue;
    const std::size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc{};
      for (int k = 0; k < 4; ++k) acc += m[r][k] * in[k];
      amps_[idx[r]] = acc;
    }
  }
}

namespace {

void fill_1q(const Gate& g, Complex (&m)[2][2]) {
  const double r = 1.0 / std::sqrt(2.0);
  const double t = g.angle.radians();
  switch (g.kind) {
    case GateKind::H: m[0][0] = r; m[0][1] = r; m[1][0] = r; m[1][1] = -r; break;
    case GateKind::X: m[0][0] = 0; m[0][1] = 1; m[1][0] = 1; m[1][1] = 0; break;
    case GateKind::SX:
      m[0][0] = m[1][1] = Complex(0.5, 0.5);
      m[0][1] = m[1][0] = Complex(0.5, -0.5);
      break;
    case GateKind::SXdg:
      m[0][0] = m[1][1] = Complex(0.5, -0.5);
      m[0][1] = m[1][0] = Complex(0.5, 0.5);
      break;
    case GateKind::S: m[0][0] = 1; m[0][1] = 0; m[1][0] = 0; m[1][1] = kI; break;
    case GateKind::Sdg: m[0][0] = 1; m[0][1] = 0; m[1][0] = 0; m[1][1] = -kI; break;
    case GateKind::Rz:
      m[0][0] = rz_phase(t, 0); m[0][1] = 0; m[1][0] = 0; m[1][1] = rz_phase(t, 1);
      break;
    case GateKind::Ry:
      m[0][0] = std::cos(t / 2); m[0][1] = -std::sin(t / 2);
      m[1][0] = std::sin(t / 2); m[1][1] = std::cos(t / 2);
      break;
    default: throw SimulationError("not a one-qubit gate");
  }
}

// Local basis index is bit(wires[0]) + 2 * bit(wires[1]).
void fill_2q(const Gate& g, Complex (&m)[4][4]) {
  for (auto& row : m) std::fill(std::begin(row), std::end(row), Complex{});
  const double t = g.angle.radians();
  switch (g.kind) {
    case GateKind::CX:
      m[0][0] = m[2][2] = 1; m[1][3] = m[3][1] = 1;
      break;
    case GateKind::CRz:
      m[0][0] = m[2][2] = 1; m[1][1] = rz_phase(t, 0); m[3][3] = rz_phase(t, 1);
      break;
    case GateKind::CP:
      m[0][0] = m[1][1] = m[2][2] = 1; m[3][3] = std::exp(kI * t);
      break;
    case GateKind::Swap:
      m[0][0] = m[3][3] = 1; m[1][2] = m[2][1] = 1;
      break;
    default: throw SimulationError("not a two-qubit gate");
  }
}

}  // namespace

void StateVector::apply(const Gate& g) {
  for (std::size_t k = 0; k < g.arity(); ++k) {
    if (g.wires[k] >= n_) throw SimulationError("gate " + g.to_string() + " out of range");
  }
  // Permutation and diagonal kinds skip the dense block multiply.
  switch (g.kind) {
    case GateKind::CX:
    case GateKind::Swap: {
      const std::size_t b0 = std::size_t{1} << g.wires[0], b1 = std::size_t{1} << g.wires[1];
      if (g.wires[0] == g.wires[1]) break;
      for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (g.kind == GateKind::CX) {
          if ((i & b0) && !(i & b1)) std::swap(amps_[i], amps_[i | b1]);
        } else if ((i & b0) && !(i & b1)) {
          std::swap(amps_[i], amps_[(i & ~b0) | b1]);
        }
      }
      return;
    }
    case GateKind::Rz: {
      const std::size_t b = std::size_t{1} << g.wires[0];
      const Complex lo = rz_phase(g.angle.radians(), 0), hi = rz_phase(g.angle.radians(), 1);
      for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & b) ? hi : lo;
      return;
    }
    default:
      break;
  }
  if (g.arity() == 1) {
    Complex m[2][2];
    fill_1q(g, m);
    apply_1q(g.wires[0], m);
  } else {
    if (g.wires[0] == g.wires[1]) throw SimulationError("gate " + g.to_string() + " repeats a wire");
    Complex m[4][4];
    fill_2q(g, m);
    apply_2q(g.wires[0], g.wires[1], m);
  }
}

void StateVector::apply(const Circuit& c) {
  for (const Gate& g : c.gates()) apply(g);
}

StateVector run(const Circuit& c, std::size_t initial, std::size_t max_qubits) {
  if (c.width() > max_qubits) {
    throw SimulationError("circuit width " + std::to_string(c.width()) +
                          " exceeds simulation cap " + std::to_string(max_qubits));
  }
  StateVector s(c.width(), initial);
  s.apply(c);
  return s;
}

void apply_multiplexed_ry(StateVector& s, const std::vector<Qubit>& controls,
                          Qubit target, const std::vector<double>& angles) {
  if (controls.size() > 16) throw SimulationError("too many multiplexer controls");
  if (angles.size() != (std::size_t{1} << controls.size())) {
    throw SimulationError("multiplexer needs 2^|controls| angles");
  }
  auto& amps = s.amplitudes();
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & tbit) continue;
    std::size_t j = 0;
    for (std::size_t k = 0; k < controls.size(); ++k) {
      if (i & (std::size_t{1} << controls[k])) j |= std::size_t{1} << k;
    }
    const double c = std::cos(angles[j] / 2), sn = std::sin(angles[j] / 2);
    const Complex a0 = amps[i], a1 = amps[i | tbit];
    amps[i] = c * a0 - sn * a1;
    amps[i | tbit] = sn * a0 + c * a1;
  }
}

Eigen::MatrixXcd gate_matrix(const Gate& g) {
  if (g.arity() == 1) {
    Complex m[2][2];
    fill_1q(g, m);
    Eigen::MatrixXcd out(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out(r, c) = m[r][c];
    return out;
  }
  Complex m[4][4];
  fill_2q(g, m);
  Eigen::MatrixXcd out(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m[r][c];
  return out;
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
  if (c.width() > kUnitaryMaxQubits) {
    throw SimulationError("unitary extraction capped at " +
                          std::to_string(kUnitaryMaxQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << c.width();
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s(c.width(), col);
    s.apply(c);
    for (std::size_t r = 0; r < dim; ++r) u(r, col) = s.amplitudes()[r];
  }
  return u;
}

namespace {

std::size_t permute_index(std::size_t b, const std::vector<Qubit>& perm) {
  std::size_t out = 0;
  for (std::size_t w = 0; w < perm.size(); ++w) {
    if (b & (std::size_t{1} << w)) out |= std::size_t{1} << perm[w];
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd permutation_matrix(const std::vector<Qubit>& perm) {
  const std::size_t dim = std::size_t{1} << perm.size();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) p(permute_index(b, perm), b) = 1.0;
  return p;
}

std::vector<Complex> permute_state(const std::vector<Complex>& amps,
                                   const std::vector<Qubit>& perm) {
  std::vector<Complex> out(amps.size());
  for (std::size_t b = 0; b < amps.size(); ++b) out[permute_index(b, perm)] = amps[b];
  return out;
}

namespace {

template <typename Get>
bool phase_match(std::size_t count, Get get, double tol) {
  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double m = std::abs(get(i).second);
    if (m > best) {
      best = m;
      pivot = i;
    }
  }
  if (best <= tol) {
    for (std::size_t i = 0; i < count; ++i) {
      if (std::abs(get(i).first) > tol) return false;
    }
    return true;
  }
  const Complex phase = get(pivot).first / get(pivot).second;
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < count; ++i) {
    auto [a, b] = get(i);
    if (std::abs(a - phase * b) > tol) return false;
  }
  return true;
}

}  // namespace

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto n = static_cast<std::size_t>(a.size());
  return phase_match(
      n, [&](std::size_t i) { return std::pair{a.data()[i], b.data()[i]}; }, tol);
}

bool equal_up_to_phase(const std::vector<Complex>& a, const std::vector<Complex>& b,
                       double tol) {
  if (a.size() != b.size()) return false;
  return phase_match(a.size(), [&](std::size_t i) { return std::pair{a[i], b[i]}; }, tol);
}

bool equivalent_up_to_perm_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                                 const std::vector<Qubit>& perm, double tol) {
  if (u.rows() != v.rows() || (std::size_t{1} << perm.size()) != static_cast<std::size_t>(u.rows())) {
    return false;
  }
  Eigen::MatrixXcd pu(u.rows(), u.cols());
  for (Eigen::Index b = 0; b < u.rows(); ++b) {
    pu.row(static_cast<Eigen::Index>(permute_index(static_cast<std::size_t>(b), perm))) = u.row(b);
  }
  return equal_up_to_phase(pu, v, tol);
}

Circuit relabel(const Circuit& c, const std::vector<Qubit>& map, std::size_t width) {
  Circuit out(width, c.space());
  for (Gate g : c.gates()) {
    for (std::size_t k = 0; k < g.arity(); ++k) g.wires[k] = map.at(g.wires[k]);
    out.append(g);
  }
  return out;
}

}  // namespace qroute

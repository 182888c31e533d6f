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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qroute/circuit.hpp"

namespace qroute {

using Complex = std::complex<double>;

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxQubits = 20;
inline constexpr std::size_t kUnitaryMaxQubits = 10;

/// Dense state over n qubits; qubit q is bit q of the basis index.
class StateVector {
 public:
  explicit StateVector(std::size_t n, std::size_t basis_index = 0);

  [[nodiscard]] std::size_t qubits() const { return n_; }
  [[nodiscard]] std::size_t dimension() const { return amps_.size(); }
  [[nodiscard]] const std::vector<Complex>& amplitudes() const { return amps_; }
  [[nodiscard]] std::vector<Complex>& amplitudes() { return amps_; }
  [[nodiscard]] Complex amplitude(std::size_t i) const { return amps_.at(i); }
  [[nodiscard]] double probability(std::size_t i) const { return std::norm(amps_.at(i)); }
  [[nodiscard]] double norm() const;

  void apply(const Gate& g);
  void apply(const Circuit& c);

 private:
  void apply_1q(Qubit q, const Complex (&m)[2][2]);
  void apply_2q(Qubit w0, Qubit w1, const Complex (&m)[4][4]);

  std::size_t n_;
  std::vector<Complex> amps_;
};

[[nodiscard]] StateVector run(const Circuit& c, std::size_t initial = 0,
                              std::size_t max_qubits = kDefaultMaxQubits);

/**
 * Uniformly controlled Ry: for control pattern j (controls[i] is bit i of j)
 * the target gets Ry(angles[j]).
 */
void apply_multiplexed_ry(StateVector& s, const std::vector<Qubit>& controls,
                          Qubit target, const std::vector<double>& angles);

/// 2x2 for one-qubit kinds, 4x4 for two-qubit kinds, in the wire-bit order
/// (wires[0] is the low bit).
[[nodiscard]] Eigen::MatrixXcd gate_matrix(const Gate& g);

[[nodiscard]] Eigen::MatrixXcd unitary_of(const Circuit& c);

/// Unitary sending the qubit on wire w to wire perm[w].
[[nodiscard]] Eigen::MatrixXcd permutation_matrix(const std::vector<Qubit>& perm);
[[nodiscard]] std::vector<Complex> permute_state(const std::vector<Complex>& amps,
                                                 const std::vector<Qubit>& perm);

[[nodiscard]] bool equal_up_to_phase(const Eigen::MatrixXcd& a,
                                     const Eigen::MatrixXcd& b, double tol = 1e-9);
[[nodiscard]] bool equal_up_to_phase(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b, double tol = 1e-9);

/// P(perm) * u == v up to a global phase.
[[nodiscard]] bool equivalent_up_to_perm_phase(const Eigen::MatrixXcd& u,
                                               const Eigen::MatrixXcd& v,
                                               const std::vector<Qubit>& perm,
                                               double tol = 1e-9);

/// Copy of c on `width` wires with wire w renamed to map[w].
[[nodiscard]] Circuit relabel(const Circuit& c, const std::vector<Qubit>& map,
                              std::size_t width);

}  // namespace qroute

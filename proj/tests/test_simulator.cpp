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

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qroute/simulator.hpp"

using namespace qroute;
using oracle::M;

TEST_CASE("run basics", "[simulator]") {
  const auto empty = run(Circuit(2));
  CHECK(std::abs(empty.amplitude(0) - Complex(1.0)) < 1e-15);
  const auto h = run(Circuit(1, {Gate::h(0)}));
  CHECK(std::abs(h.amplitude(0) - Complex(1 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(h.amplitude(1) - Complex(1 / std::sqrt(2.0))) < 1e-15);

  // One-symbol automaton for k=1, p=5 read five times returns to |0>.
  Circuit c(1);
  for (int i = 0; i < 5; ++i) c.append(Gate::ry(0, 2 * kPi / 5));
  CHECK(run(c).probability(0) == Catch::Approx(1.0).margin(1e-12));

  CHECK_THROWS_AS(run(Circuit(21)), SimulationError);
  CHECK_THROWS_AS(run(Circuit(6), 0, 5), SimulationError);
  CHECK_THROWS_AS(run(Circuit(2, {Gate::h(2)})), SimulationError);
}

TEST_CASE("gate matrices agree with the Kronecker oracle", "[simulator]") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 60; ++i) {
    const auto gates = oracle::random_gates(rng, 3, 1);
    CHECK(oracle::phase_distance(unitary_of(Circuit(3, gates)), oracle::unitary(gates, 3)) < 1e-12);
    // Exact equality, global phase included.
    CHECK((unitary_of(Circuit(3, gates)) - oracle::unitary(gates, 3)).cwiseAbs().maxCoeff() < 1e-12);
  }
  M cnot = M::Zero(4, 4);
  cnot(0, 0) = cnot(2, 2) = cnot(3, 1) = cnot(1, 3) = 1.0;
  CHECK((unitary_of(Circuit(2, {Gate::cx(0, 1)})) - cnot).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((gate_matrix(Gate::cx(0, 1)) - cnot).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Ry is SX-conjugated Rz", "[simulator]") {
  for (double t : {0.1, 1.0, 2 * kPi / 5, 5.0}) {
    const Circuit c(1, {Gate::sx(0), Gate::rz(0, t), Gate::sxdg(0)});
    CHECK((unitary_of(c) - oracle::Ry(t)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("unitarity and composition", "[simulator][property]") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Circuit a(4, oracle::random_gates(rng, 4, 30)), b(4, oracle::random_gates(rng, 4, 30));
    const M u = unitary_of(a);
    CHECK((u.adjoint() * u - M::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
    const std::size_t init = rng() % 16;
    auto staged = run(a, init);
    staged.apply(b);
    CHECK(equal_up_to_phase(run(compose(a, b), init).amplitudes(), staged.amplitudes(), 1e-10));
  }
}

TEST_CASE("norm is preserved over long sequences", "[simulator][property]") {
  std::mt19937_64 rng(9);
  StateVector s(6, 5);
  for (const auto& g : oracle::random_gates(rng, 6, 10000)) s.apply(g);
  CHECK(s.norm() == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("multiplexed Ry", "[simulator]") {
  StateVector s(3, 0b101);
  apply_multiplexed_ry(s, {0, 2}, 1, {0, 0, 0, 0});
  CHECK(s.probability(0b101) == Catch::Approx(1.0));

  StateVector t(2, 0b01);  // control (wire 0) set, target (wire 1) clear
  apply_multiplexed_ry(t, {0}, 1, {0.0, kPi});
  CHECK(std::abs(t.amplitude(0b11) - Complex(1.0)) < 1e-12);

  CHECK_THROWS_AS(apply_multiplexed_ry(t, {0}, 1, {0.0}), SimulationError);
}

TEST_CASE("multiplexed Ry matches a CX/Ry multiplexer circuit", "[simulator]") {
  // Ry(b0) CX(c0,t) Ry(b1) CX(c1,t) Ry(b2) CX(c0,t) Ry(b3) CX(c1,t): pattern j
  // sees sum_k (-1)^{f_k(j)} b_k with flip sets {}, {c0}, {c0,c1}, {c1}.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-kPi, kPi);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::Vector4d alpha;
    for (int j = 0; j < 4; ++j) alpha[j] = d(rng);
    Eigen::Matrix4d sign;
    for (int j = 0; j < 4; ++j) {
      const int b0 = j & 1, b1 = (j >> 1) & 1;
      const int flips[4] = {0, b0, b0 ^ b1, b1};
      for (int k = 0; k < 4; ++k) sign(j, k) = flips[k] ? -1.0 : 1.0;
    }
    const Eigen::Vector4d beta = sign.fullPivLu().solve(alpha);
    const Circuit c(3, {Gate::ry(2, beta[0]), Gate::cx(0, 2), Gate::ry(2, beta[1]), Gate::cx(1, 2),
                        Gate::ry(2, beta[2]), Gate::cx(0, 2), Gate::ry(2, beta[3]), Gate::cx(1, 2)});
    for (std::size_t init = 0; init < 8; ++init) {
      StateVector s(3, init);
      apply_multiplexed_ry(s, {0, 1}, 2, {alpha[0], alpha[1], alpha[2], alpha[3]});
      // Ry angles are 4*pi periodic, so compare up to sign.
      CHECK(equal_up_to_phase(run(c, init).amplitudes(), s.amplitudes(), 1e-12));
    }
  }
}

TEST_CASE("equivalence up to permutation and phase", "[simulator]") {
  const M i4 = M::Identity(4, 4);
  CHECK(equivalent_up_to_perm_phase(i4, i4, {0, 1}));
  const M sw = unitary_of(Circuit(2, {Gate::swap(0, 1)}));
  CHECK(equivalent_up_to_perm_phase(sw, i4, {1, 0}));
  CHECK_FALSE(equivalent_up_to_perm_phase(sw, i4, {0, 1}));
  CHECK(equivalent_up_to_perm_phase(std::complex<double>(0, 1) * i4, i4, {0, 1}));
  CHECK_FALSE(equivalent_up_to_perm_phase(2.0 * i4, i4, {0, 1}));

  std::mt19937_64 rng(8);
  const Circuit c(3, oracle::random_gates(rng, 3, 25));
  const std::vector<Qubit> perm{1, 2, 0};
  Circuit moved = c;
  // Cycle the wires with swaps: content of w ends on perm[w].
  moved.append(Gate::swap(0, 1)).append(Gate::swap(0, 2));
  CHECK(equivalent_up_to_perm_phase(unitary_of(c), unitary_of(moved), perm));
  CHECK((permutation_matrix(perm) - unitary_of(Circuit(3, {Gate::swap(0, 1), Gate::swap(0, 2)}))).cwiseAbs().maxCoeff() < 1e-15);
}

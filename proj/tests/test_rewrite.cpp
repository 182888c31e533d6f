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
#include "qroute/rewrite.hpp"
#include "qroute/simulator.hpp"

using namespace qroute;
using oracle::M;

namespace {

double dist(const std::vector<Gate>& gates, const M& want) {
  return oracle::phase_distance(oracle::unitary(gates, 2), want);
}

}  // namespace

TEST_CASE("decompose_crz", "[rewrite]") {
  const auto zero = decompose_crz(0, 1, Angle(0.0));
  CHECK(cnot_count(zero) == 2);
  CHECK(dist(zero, M::Identity(4, 4)) < 1e-12);

  const auto g = decompose_crz(0, 1, Angle(kPi / 2));
  CHECK(dist(g, oracle::controlled(oracle::Rz(kPi / 2), 0, 1, 2)) < 1e-12);
  CHECK(cnot_count(decompose_crz(1, 0, Angle(1.234))) == 2);
}

TEST_CASE("decompose_swap", "[rewrite]") {
  const auto g = decompose_swap(0, 1);
  CHECK(cnot_count(g) == 3);
  StateVector s(2, 0b01);
  for (const auto& x : g) s.apply(x);
  CHECK(std::abs(s.amplitude(0b10) - Complex(1.0)) < 1e-12);
  M sw = M::Zero(4, 4);
  sw(0, 0) = sw(3, 3) = sw(1, 2) = sw(2, 1) = 1.0;
  CHECK((oracle::unitary(g, 2) - sw).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fused rotation and swap", "[rewrite]") {
  const double t = 2 * kPi / 5;
  const auto g = fuse_crz_swap(0, 1, Angle(t));
  CHECK(cnot_count(g) == 3);
  CHECK(dist(g, oracle::swap(0, 1, 2) * oracle::controlled(oracle::Rz(t), 0, 1, 2)) < 1e-12);
  const auto z = fuse_crz_swap(0, 1, Angle(0.0));
  CHECK(z.size() == 3);
  CHECK(same_gates(Circuit(2, z), Circuit(2, decompose_swap(0, 1))));

  const auto cp = fuse_cp_swap(0, 1, Angle(kPi / 4));
  CHECK(cnot_count(cp) == 3);
  CHECK(dist(cp, oracle::swap(0, 1, 2) * oracle::controlled(oracle::Phase(kPi / 4), 0, 1, 2)) < 1e-12);
  CHECK(dist(fuse_cp_swap(0, 1, Angle(0.0)), oracle::swap(0, 1, 2)) < 1e-12);

  const auto in_place = decompose_cp(1, 0, Angle(kPi / 8));
  CHECK(cnot_count(in_place) == 2);
  CHECK(dist(in_place, oracle::controlled(oracle::Phase(kPi / 8), 1, 0, 2)) < 1e-12);
}

TEST_CASE("rewrite rules over random angles", "[rewrite][property]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(-4 * kPi, 4 * kPi);
  for (int i = 0; i < 100; ++i) {
    const double t = d(rng);
    const M crz = oracle::controlled(oracle::Rz(Angle(t).radians()), 0, 1, 2);
    const M cp = oracle::controlled(oracle::Phase(t), 0, 1, 2);
    CHECK(dist(decompose_crz(0, 1, Angle(t)), crz) < 1e-12);
    CHECK(dist(fuse_crz_swap(0, 1, Angle(t)), oracle::swap(0, 1, 2) * crz) < 1e-12);
    CHECK(dist(fuse_cp_swap(0, 1, Angle(t)), oracle::swap(0, 1, 2) * cp) < 1e-12);
    CHECK(dist(decompose_cp(0, 1, Angle(t)), cp) < 1e-12);
    // Forward fusion, then the reverse with control and target exchanged.
    // Canonical angles t and -t sum to 2 pi, leaving a Z on the control.
    auto there = fuse_crz_swap(0, 1, Angle(t));
    auto back = fuse_crz_swap(1, 0, Angle(-t));
    there.insert(there.end(), back.begin(), back.end());
    const M z0 = oracle::single(oracle::mat2(1, 0, 0, -1), 0, 2);
    CHECK(dist(there, Angle(t).is_zero() ? M(M::Identity(4, 4)) : z0) < 1e-12);
  }
}

TEST_CASE("cancel_cx_pairs", "[rewrite]") {
  CHECK(cancel_cx_pairs(Circuit(2, {Gate::cx(0, 1), Gate::cx(0, 1)})).empty());
  const auto disjoint = cancel_cx_pairs(Circuit(3, {Gate::cx(0, 1), Gate::rz(2, 0.5), Gate::cx(0, 1)}));
  REQUIRE(disjoint.size() == 1);
  CHECK(disjoint.gates()[0].kind == GateKind::Rz);
  const Circuit blocked(2, {Gate::cx(0, 1), Gate::rz(1, 0.5), Gate::cx(0, 1)});
  CHECK(same_gates(cancel_cx_pairs(blocked), blocked));
  const Circuit reversed(2, {Gate::cx(0, 1), Gate::cx(1, 0)});
  CHECK(same_gates(cancel_cx_pairs(reversed), reversed));
  // Nested pairs cancel to the fixpoint.
  CHECK(cancel_cx_pairs(Circuit(3, {Gate::cx(0, 1), Gate::cx(1, 2), Gate::cx(1, 2), Gate::cx(0, 1)})).empty());
}

TEST_CASE("merge_adjacent_crz", "[rewrite]") {
  const auto m = merge_adjacent_crz(Circuit(2, {Gate::crz(0, 1, 0.25), Gate::crz(0, 1, 0.5)}));
  REQUIRE(m.size() == 1);
  CHECK(m.gates()[0].angle.approx_equal(Angle(0.75)));
  const Circuit blocked(2, {Gate::crz(0, 1, 0.25), Gate::h(0), Gate::crz(0, 1, 0.5)});
  CHECK(same_gates(merge_adjacent_crz(blocked), blocked));
  const Circuit other_pair(2, {Gate::crz(0, 1, 0.25), Gate::crz(1, 0, 0.5)});
  CHECK(same_gates(merge_adjacent_crz(other_pair), other_pair));

  // A sum past 2*pi gets a compensating Rz(pi) on the control.
  const Circuit wrap(2, {Gate::crz(0, 1, 5.0), Gate::crz(0, 1, 4.0)});
  const auto w = merge_adjacent_crz(wrap);
  CHECK(cnot_count(lower_to_hardware(w)) == 2);
  CHECK(oracle::phase_distance(oracle::unitary(w), oracle::unitary(wrap)) < 1e-12);

  // Saves exactly one decomposition.
  CHECK(cnot_count(lower_to_hardware(Circuit(2, {Gate::crz(0, 1, 0.3), Gate::crz(0, 1, 0.4)}))) -
            cnot_count(lower_to_hardware(m)) == 2);
}

TEST_CASE("peephole passes preserve unitaries", "[rewrite][property]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    // Bias towards mergeable and cancellable neighbours.
    auto gates = oracle::random_gates(rng, n, 12);
    for (std::size_t i = 0; i + 1 < gates.size(); i += 3) {
      if (is_two_qubit(gates[i].kind)) {
        gates[i + 1] = gates[i];
        gates[i + 1].angle = Angle(0.7 * static_cast<double>(i));
      }
    }
    const Circuit c(n, gates);
    const auto merged = merge_adjacent_crz(c);
    const auto cancelled = cancel_cx_pairs(lower_to_hardware(c));
    const auto u = oracle::unitary(c);
    CHECK(oracle::phase_distance(oracle::unitary(merged), u) < 1e-10);
    CHECK(oracle::phase_distance(oracle::unitary(cancelled), u) < 1e-10);
    CHECK(oracle::phase_distance(oracle::unitary(lower_to_hardware(c)), u) < 1e-10);
    CHECK(cnot_count(lower_to_hardware(merged)) <= cnot_count(lower_to_hardware(c)));
    CHECK(cnot_count(cancelled) <= cnot_count(lower_to_hardware(c)));
  }
}

TEST_CASE("lower_to_hardware fuses a rotation with the following swap", "[rewrite]") {
  const Circuit c(3, {Gate::crz(0, 1, 0.4), Gate::swap(1, 0), Gate::cp(1, 2, 0.2), Gate::swap(0, 2)});
  const auto low = lower_to_hardware(c);
  CHECK(low.space() == Space::Physical);
  CHECK(cnot_count(low) == 3 + 2 + 3);
  for (const auto& g : low.gates()) CHECK_FALSE(is_logical_only(g.kind));
  CHECK(oracle::phase_distance(oracle::unitary(low), oracle::unitary(c)) < 1e-12);
}

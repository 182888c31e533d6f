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
#include "qroute/circuit.hpp"
#include "qroute/simulator.hpp"
#include "qroute/topology.hpp"

using namespace qroute;

TEST_CASE("angle canonicalisation is compatible with addition", "[circuit][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = d(rng), b = d(rng);
    const Angle direct(a + b);
    const Angle staged = Angle(a) + Angle(b);
    CHECK(direct.approx_equal(staged, 1e-12));
    CHECK(staged.radians() >= 0.0);
    CHECK(staged.radians() < kTwoPi);
  }
  CHECK(Angle(-kPi / 4).approx_equal(Angle(7 * kPi / 4)));
  CHECK(Angle(kTwoPi - 1e-13).approx_equal(Angle(0.0)));
}

TEST_CASE("cnot_count counts CX only", "[circuit]") {
  CHECK(cnot_count(Circuit(3)) == 0);
  Circuit c(3);
  c.append(Gate::cx(0, 1)).append(Gate::h(0)).append(Gate::cx(1, 2));
  CHECK(cnot_count(c) == 2);
  c.append(Gate::crz(0, 1, 0.3)).append(Gate::swap(1, 2)).append(Gate::cp(0, 2, 0.1));
  CHECK(cnot_count(c) == 2);
}

TEST_CASE("inverse reverses and negates", "[circuit]") {
  Circuit h(1);
  h.append(Gate::h(0));
  CHECK(same_gates(inverse(h), h));

  Circuit c(2);
  c.append(Gate::rz(0, kPi / 4)).append(Gate::cx(0, 1));
  Circuit want(2);
  want.append(Gate::cx(0, 1)).append(Gate::rz(0, 7 * kPi / 4));
  CHECK(same_gates(inverse(c), want));
  CHECK(inverse(Circuit(1, {Gate::sx(0)})).gates()[0].kind == GateKind::SXdg);
  CHECK(inverse(Circuit(1, {Gate::s(0)})).gates()[0].kind == GateKind::Sdg);
  const auto crz = inverse(Circuit(2, {Gate::crz(0, 1, kPi / 3)}));
  REQUIRE(crz.size() == 2);
  CHECK(crz.gates()[0].angle.approx_equal(Angle(5 * kPi / 3)));
  CHECK(crz.gates()[1].kind == GateKind::Rz);
  CHECK(crz.gates()[1].wires[0] == 0);
  CHECK(inverse(Circuit(2, {Gate::crz(0, 1, 0.0)})).size() == 1);
}

TEST_CASE("inverse properties on random circuits", "[circuit][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c(3, oracle::random_gates(rng, 3, 20));
    // Gate-for-gate involution holds without CRz; with it, up to phase.
    Circuit plain(3, oracle::random_gates(rng, 3, 20, false));
    CHECK(same_gates(inverse(inverse(plain)), plain));
    CHECK(oracle::phase_distance(unitary_of(inverse(inverse(c))), unitary_of(c)) < 1e-10);
    const auto u = unitary_of(compose(c, inverse(c)));
    CHECK(oracle::phase_distance(u, oracle::M::Identity(8, 8)) < 1e-10);
    Circuit d(3, oracle::random_gates(rng, 3, 15));
    CHECK(cnot_count(compose(c, d)) == cnot_count(c) + cnot_count(d));
  }
}

TEST_CASE("validate reports violations as data", "[circuit]") {
  Circuit ok(2);
  ok.append(Gate::h(0)).append(Gate::cx(0, 1));
  CHECK(validate(ok).empty());

  const auto g = guadalupe16_graph();
  Circuit bad(16, {Gate::h(3), Gate::cx(0, 5)}, Space::Physical);
  const auto v = validate(bad, &g);
  REQUIRE(v.size() == 1);
  CHECK(v[0].gate_index == 1);
  CHECK(v[0].message.find("gate 1") != std::string::npos);

  Circuit range(16, {Gate::x(16)});
  const auto r = validate(range);
  REQUIRE(r.size() == 1);
  CHECK(r[0].message.find("out of range") != std::string::npos);

  Circuit logical_kind(16, {Gate::swap(0, 1)}, Space::Physical);
  CHECK(validate(logical_kind, &g).size() == 1);
  CHECK(validate(Circuit(2, {Gate::cx(1, 1)})).size() == 1);
}

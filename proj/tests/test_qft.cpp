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

#include <set>

#include "oracles.hpp"
#include "qroute/qft.hpp"
#include "qroute/simulator.hpp"

using namespace qroute;

namespace {

std::set<Qubit> occupied(const ScheduleRow& row) {
  std::set<Qubit> out;
  for (std::size_t x = 0; x < row.size(); ++x) {
    if (row[x] != kIdle) out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("reference QFT is the bit-reversed DFT", "[qft]") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = reference_qft(n);
    CHECK(c.size() == n + n * (n - 1) / 2);
    CHECK(oracle::phase_distance(unitary_of(c), oracle::dft_bit_reversed(n)) < 1e-10);
  }
  CHECK_THROWS_AS(reference_qft(0), ScheduleError);
}

TEST_CASE("built-in tables", "[qft]") {
  const auto s16 = builtin_schedule("guadalupe16");
  CHECK(s16.n == 16);
  REQUIRE(s16.rows.size() == 15);
  CHECK(s16.rows[0][0] == 1);   // q2 starts on position 0
  CHECK(s16.rows[0][1] == 0);   // q1 on position 1
  CHECK(s16.rows[14][2] == 13);
  const auto s27 = builtin_schedule("falcon27");
  CHECK(s27.n == 27);
  CHECK(s27.rows.size() == 26);
  CHECK(s27.rows[25][1] == 26);
  CHECK_THROWS_AS(builtin_schedule("lnn"), ScheduleError);
}

TEST_CASE("built-in tables execute", "[qft]") {
  const auto s16 = builtin_schedule("guadalupe16");
  CHECK(validate_schedule(s16).empty());
  const auto ex = execute_schedule(s16);
  REQUIRE(ex.cost.breakdown.size() == 16);
  CHECK(ex.cost.breakdown[0].second == 40);
  CHECK(ex.cost.breakdown[1].second == 38);
  CHECK(ex.cost.total_cnots == 325);
  CHECK(ex.cost.consistent());
  CHECK(static_cast<std::int64_t>(cnot_count(ex.circuit)) == ex.cost.total_cnots);
  CHECK(validate(ex.circuit, &s16.device.graph).empty());
  CHECK(verify_structural(ex.trace, ex.initial_layout, 16).ok);

  const auto s27 = builtin_schedule("falcon27");
  CHECK(validate_schedule(s27).empty());
  const auto ex27 = execute_schedule(s27);
  CHECK(ex27.cost.total_cnots == 953);
  CHECK(validate(ex27.circuit, &s27.device.graph).empty());
  CHECK(verify_structural(ex27.trace, ex27.initial_layout, 27).ok);
}

TEST_CASE("cost model per cascade", "[qft]") {
  // Every CP costs 2 alone or 3 fused with its swap; a bare swap costs 3.
  const auto s = builtin_schedule("guadalupe16");
  const auto ex = execute_schedule(s);
  for (std::size_t t = 0; t < ex.walks.size(); ++t) {
    const auto moves = static_cast<std::int64_t>(ex.walks[t].size()) - 1;
    const auto partners = static_cast<std::int64_t>(16 - 1 - t);
    const auto cost = ex.cost.breakdown[t].second;
    CHECK(cost >= 2 * partners);
    CHECK(cost <= 2 * partners + 3 * moves);
    CHECK(cost - 2 * partners >= moves);
  }
}

TEST_CASE("schedule text round trip", "[qft]") {
  for (const char* d : {"guadalupe16", "falcon27"}) {
    const auto s = builtin_schedule(d);
    const auto back = parse_schedule(to_schedule_text(s));
    CHECK(back.n == s.n);
    CHECK(back.rows == s.rows);
    CHECK(back.device.name == s.device.name);
  }
  auto g = greedy_schedule(5, guadalupe16());
  const auto text = to_schedule_text(g);
  CHECK(text.find('-') != std::string::npos);
  CHECK(parse_schedule(text).rows == g.rows);

  CHECK_THROWS_AS(parse_schedule("1,2\n"), ScheduleError);
  CHECK_THROWS_AS(parse_schedule("n= 2 device=nowhere\n1,2\n"), ScheduleError);
  CHECK_THROWS_WITH(parse_schedule("n= 2 device=lnn3\n1,x,2\n"), Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_AS(parse_schedule("n= 2 device=lnn3\n1,0,2\n"), ScheduleError);
  CHECK_THROWS_AS(parse_schedule(""), ScheduleError);
  const auto lnn = parse_schedule("# comment\nn= 2 device=lnn3\n1,2,-\n");
  CHECK(lnn.rows[0] == ScheduleRow{0, 1, kIdle});
}

TEST_CASE("diagnostics", "[qft]") {
  auto s = builtin_schedule("guadalupe16");
  // Two non-adjacent positions exchanged in row 3.
  std::swap(s.rows[2][0], s.rows[2][15]);
  const auto d = validate_schedule(s);
  REQUIRE_FALSE(d.empty());
  CHECK(d.front().row >= 2);
  CHECK_THROWS_AS(execute_schedule(s), ScheduleError);
  const auto text = schedule_diagnostics_text(s, "broken");
  CHECK(text.find("flagged row=") != std::string::npos);

  auto dup = builtin_schedule("guadalupe16");
  dup.rows[4][0] = dup.rows[4][1];
  const auto dd = validate_schedule(dup);
  REQUIRE_FALSE(dd.empty());
  CHECK(dd.front().row == 5);
  CHECK(dd.front().message.find("twice") != std::string::npos);

  auto shortrow = builtin_schedule("guadalupe16");
  shortrow.rows[1].pop_back();
  CHECK(validate_schedule(shortrow).front().row == 2);
  CHECK_THROWS_AS(execute_schedule(shortrow), ScheduleError);

  const auto ok = schedule_diagnostics_text(builtin_schedule("guadalupe16"), "table");
  CHECK(ok.find("no flagged cells") != std::string::npos);
  CHECK(ok.find("total = 325") != std::string::npos);
}

TEST_CASE("static CP needs a neighbour of the walk", "[qft]") {
  QftSchedule s;
  s.device = lnn(4);
  s.n = 3;
  s.rows = {{0, 1, kIdle, 2}};
  const auto d = validate_schedule(s);
  REQUIRE_FALSE(d.empty());
  CHECK(d.front().position == 3);
  CHECK_THROWS_AS(execute_schedule(s), ScheduleError);
}

TEST_CASE("greedy schedules", "[qft]") {
  const auto g16 = guadalupe16();
  const std::vector<std::int64_t> expect{2, 7, 15, 26, 40, 56, 75, 97, 121, 148, 178, 211, 247, 285, 326};
  for (std::size_t n = 2; n <= 16; ++n) {
    const auto s = greedy_schedule(n, g16);
    INFO("n=" << n);
    CHECK(validate_schedule(s).empty());
    const auto ex = execute_schedule(s);
    CHECK(ex.cost.total_cnots == expect[n - 2]);
    CHECK(ex.cost.total_cnots <= greedy_cost_bound(n));
    CHECK(verify_structural(ex.trace, ex.initial_layout, n).ok);
    CHECK(validate(ex.circuit, &g16.graph).empty());
    if (n <= 8) CHECK(verify_unitary(ex, n));
  }
  const auto s7 = greedy_schedule(7, g16);
  CHECK(occupied(s7.rows[0]) == std::set<Qubit>{0, 1, 2, 4, 7, 6, 10});

  const auto s1 = greedy_schedule(1, g16);
  CHECK(execute_schedule(s1).cost.total_cnots == 0);
  CHECK_THROWS_AS(greedy_schedule(17, g16), ScheduleError);
  CHECK_THROWS_AS(greedy_schedule(0, g16), ScheduleError);
  CHECK(greedy_cost_bound(16) == 405);
}

TEST_CASE("greedy agrees with the tables on shared rows", "[qft]") {
  const auto table = builtin_schedule("guadalupe16");
  const auto g = greedy_schedule(16, guadalupe16());
  for (std::size_t r = 0; r < 13; ++r) CHECK(g.rows[r] == table.rows[r]);
}

TEST_CASE("greedy on line topologies", "[qft]") {
  const std::vector<std::int64_t> expect{2, 8, 17, 29, 44, 62, 83, 107, 134};
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto spec = lnn(n);
    const auto ex = execute_schedule(greedy_schedule(n, spec));
    INFO("n=" << n);
    CHECK(ex.cost.total_cnots == expect[n - 2]);
    CHECK(verify_structural(ex.trace, ex.initial_layout, n).ok);
    if (n <= 7) CHECK(verify_unitary(ex, n));
  }
}

TEST_CASE("structural check catches injected faults", "[qft]") {
  const auto ex = execute_schedule(greedy_schedule(6, guadalupe16()));
  REQUIRE(verify_structural(ex.trace, ex.initial_layout, 6).ok);
  const auto& gates = ex.trace.gates();

  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].kind == GateKind::Swap) continue;
    auto dropped = gates;
    dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(i));
    CHECK_FALSE(verify_structural(Circuit(ex.trace.width(), dropped), ex.initial_layout, 6).ok);
  }
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].kind != GateKind::CP) continue;
    auto bent = gates;
    bent[i].angle = Angle(bent[i].angle.radians() * 2);
    const auto rep = verify_structural(Circuit(ex.trace.width(), bent), ex.initial_layout, 6);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.diff.empty());
  }
  auto extra = gates;
  extra.push_back(Gate::h(ex.final_layout[0]));
  CHECK_FALSE(verify_structural(Circuit(ex.trace.width(), extra), ex.initial_layout, 6).ok);
}

TEST_CASE("structural and unitary checks agree", "[qft][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const auto ex = execute_schedule(greedy_schedule(n, lnn(n)));
    CHECK(verify_structural(ex.trace, ex.initial_layout, n).ok == verify_unitary(ex, n));
    // Dropping one CX breaks the unitary.
    auto gates = ex.circuit.gates();
    QftExecution broken = ex;
    std::size_t first_cx = 0;
    while (first_cx < gates.size() && gates[first_cx].kind != GateKind::CX) ++first_cx;
    gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(first_cx));
    broken.circuit = Circuit(ex.circuit.width(), gates, Space::Physical);
    CHECK_FALSE(verify_unitary(broken, n));
  }
}

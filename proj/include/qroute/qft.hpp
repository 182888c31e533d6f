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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/cost.hpp"
#include "qroute/topology.hpp"

namespace qroute {

class ScheduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kIdle = -1;

/// Physical position -> logical qubit (0-based), kIdle where unused.
using ScheduleRow = std::vector<std::int64_t>;

/**
 * Cascade-by-cascade placement. rows[t] is the placement when cascade t
 * (target q_t) starts; rows[t + 1], when present, is where that cascade
 * leaves the qubits. Cascades past the last row run without moving.
 */
struct QftSchedule {
  std::size_t n = 0;
  std::vector<ScheduleRow> rows;
  TopologySpec device;
};

/// H(q_j), then CP(q_{j+m}, q_j, pi/2^m) for m = 1..n-1-j; output bit-reversed.
[[nodiscard]] Circuit reference_qft(std::size_t n);

/// The repositioning tables for "guadalupe16" (15 rows) and "falcon27" (26 rows).
[[nodiscard]] QftSchedule builtin_schedule(std::string_view device);

/// "n= K device=NAME" header, then one comma-separated row per line with
/// 1-based labels and '-' for idle positions. `device` overrides NAME lookup.
[[nodiscard]] QftSchedule parse_schedule(std::string_view text,
                                         const std::optional<TopologySpec>& device = std::nullopt);
[[nodiscard]] std::string to_schedule_text(const QftSchedule& s);

struct ScheduleDiagnostic {
  std::size_t row;       // 1-based, as printed in the tables
  std::size_t position;  // physical position
  std::string message;
};

/// Every problem that would stop execute_schedule, collected rather than thrown.
[[nodiscard]] std::vector<ScheduleDiagnostic> validate_schedule(const QftSchedule& s);

struct QftExecution {
  /// H / CP / SWAP on physical wires, before lowering.
  Circuit trace;
  /// Hardware-basis circuit.
  Circuit circuit;
  CostReport cost;
  Layout initial_layout;  // logical -> physical
  Layout final_layout;
  /// Target walk of each cascade, physical positions.
  std::vector<std::vector<Qubit>> walks;
};

/**
 * Runs the cascades. The target of each cascade walks along the positions
 * implied by the row diff; a partner on the walk gets a fused CP+SWAP
 * (3 CNOTs), every other unfinished qubit must touch the walk and gets an
 * in-place CP (2 CNOTs). Throws ScheduleError on the first diagnostic.
 */
[[nodiscard]] QftExecution execute_schedule(const QftSchedule& s);

/**
 * Schedule that walks each target along the topology's chain/stationary tree
 * and parks it in the next free retirement slot (service order reversed),
 * falling back to the cheapest valid slot; the last cascades are searched
 * exhaustively.
 */
[[nodiscard]] QftSchedule greedy_schedule(std::size_t n, const TopologySpec& spec);

/// 3 n (n-1) / 2 + 3 (n-1).
[[nodiscard]] std::int64_t greedy_cost_bound(std::size_t n);

struct StructuralReport {
  bool ok = true;
  std::vector<std::string> diff;
};

/// Maps the trace back through its SWAPs and compares with reference_qft(n).
[[nodiscard]] StructuralReport verify_structural(const Circuit& trace,
                                                 const Layout& initial_layout,
                                                 std::size_t n);

/// Unitary comparison against reference_qft(n) on the occupied positions
/// (at most 10), up to the executor's final permutation and global phase.
[[nodiscard]] bool verify_unitary(const QftExecution& ex, std::size_t n, double tol = 1e-9);

/// Adjacency diagnostics plus executed totals, the format shipped in data/.
[[nodiscard]] std::string schedule_diagnostics_text(const QftSchedule& s,
                                                    std::string_view label);

}  // namespace qroute

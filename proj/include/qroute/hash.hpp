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
#include <stdexcept>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/cost.hpp"
#include "qroute/topology.hpp"

namespace qroute {

class HashError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Parameters of the pseudo-rotation automaton for MOD_p.
 *
 * Wire layout of the logical circuit: controls 0..m-2, target m-1. Control
 * wire i carries xi[i + 1]; xi[0] is the unconditional rotation. Each xi is
 * a plane-rotation angle, so the target sees Ry(2 xi) per symbol.
 */
struct HashParams {
  std::uint64_t p = 3;
  std::size_t m = 2;
  std::vector<double> xi;
  std::size_t l = 0;

  [[nodiscard]] std::size_t controls() const { return m - 1; }
  [[nodiscard]] std::size_t branches() const { return std::size_t{1} << (m - 1); }
};

[[nodiscard]] bool is_prime(std::uint64_t n);

/// Throws HashError when p is not an odd prime, m < 2 or |xi| != m.
void validate(const HashParams& hp);

/// theta_j = xi_0 + sum_i bit_i(j) xi_{i+1}, one per control pattern j.
struct EffectiveK {
  std::vector<double> thetas;
};
[[nodiscard]] EffectiveK effective_k(const HashParams& hp);

[[nodiscard]] Circuit logical_pseudo_circuit(const HashParams& hp);

/// ((1/d) sum_j cos(l theta_j))^2.
[[nodiscard]] double accept_prob(const HashParams& hp);
[[nodiscard]] double accept_prob(const HashParams& hp, std::int64_t l);

/// Worst acceptance over l = 1..p-1, the one-sided error of the automaton.
[[nodiscard]] double error_bound(const HashParams& hp);

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

struct AngleSearchResult {
  std::vector<double> xi;
  double eps = 1.0;
  std::size_t trials = 0;
};

/**
 * Seeded random search over angle vectors drawn from the grid 2*pi*k/p.
 * Returns the first minimiser of error_bound; identical for a fixed seed.
 */
[[nodiscard]] AngleSearchResult search_angles(std::uint64_t p, std::size_t m,
                                              std::size_t budget,
                                              std::uint64_t seed = kDefaultSeed);

/// Deterministic angles 2*pi*((i mod (p-1)) + 1)/p, none of which is zero.
[[nodiscard]] std::vector<double> default_angles(std::uint64_t p, std::size_t m);

struct RoutedHash {
  Circuit circuit;
  Layout initial_layout;  // logical wire -> physical qubit
  Layout final_layout;
  CostReport cost;
};

[[nodiscard]] RoutedHash routed_hash_circuit(const HashParams& hp, const TopologySpec& spec);
[[nodiscard]] RoutedHash naive_routed_circuit(const HashParams& hp, const TopologySpec& spec);

/// Number of merged symbol boundaries: 0, 1, then l - 2.
[[nodiscard]] std::size_t merged_boundaries(std::size_t l);

/// Closed-form CNOT count of routed_hash_circuit for any valid spec.
[[nodiscard]] std::int64_t cost_formula(const TopologySpec& spec, std::size_t l);
/// Device form: "guadalupe16" or "falcon27".
[[nodiscard]] std::int64_t cost_formula(std::string_view device, std::size_t l);

/// Acceptance of l1 forward symbols followed by l2 reversed ones (simulated
/// when m is small enough, closed form otherwise).
[[nodiscard]] double equality_test(const HashParams& hp, std::size_t l1, std::size_t l2);

/// Logical circuit for an arbitrary sequence of forward (+1) and reversed
/// (-1) symbols.
[[nodiscard]] Circuit logical_pseudo_circuit(const HashParams& hp,
                                             const std::vector<int>& symbol_signs);

}  // namespace qroute

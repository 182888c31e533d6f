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

#include <optional>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

// Gate-list forms of the circuit equalities. Rz(0) is never emitted.

/// Controlled-Rz(theta) with two CNOTs.
[[nodiscard]] std::vector<Gate> decompose_crz(Qubit control, Qubit target, Angle theta);
/// SWAP as three alternating CNOTs.
[[nodiscard]] std::vector<Gate> decompose_swap(Qubit a, Qubit b);
/// SWAP after CRz(theta): the middle CNOT pair of the naive form cancels, 3 CNOTs.
[[nodiscard]] std::vector<Gate> fuse_crz_swap(Qubit control, Qubit target, Angle theta);
/// SWAP after CP(theta), 3 CNOTs. The extra Rz on the control turns CRz into CP.
[[nodiscard]] std::vector<Gate> fuse_cp_swap(Qubit control, Qubit target, Angle theta);
/// CP(theta) in place, 2 CNOTs.
[[nodiscard]] std::vector<Gate> decompose_cp(Qubit control, Qubit target, Angle theta);

/// Removes CX(a,b) CX(a,b) pairs that only have gates on other wires between them.
[[nodiscard]] Circuit cancel_cx_pairs(const Circuit& c);

struct CrzMerge {
  Gate merged;
  /// The summed angle crossed 2*pi. CRz is 4*pi periodic, so the canonical
  /// sum differs from the true product by a Z on the control wire.
  bool wrapped = false;
};

/// Merges two CRz gates on the same (control, target); nullopt otherwise.
[[nodiscard]] std::optional<CrzMerge> try_merge_crz(const Gate& a, const Gate& b);

/**
 * Merges CRz pairs on the same (control, target) with nothing on either wire
 * in between. A wrapped merge is preceded by Rz(pi) on the control, which
 * restores the product exactly up to global phase.
 */
[[nodiscard]] Circuit merge_adjacent_crz(const Circuit& c);

/**
 * Rewrites CRz, CP and SWAP into {CX, Rz}. A CRz or CP immediately followed
 * by a SWAP on the same pair is lowered with the fused 3-CNOT form. The
 * result is tagged physical.
 */
[[nodiscard]] Circuit lower_to_hardware(const Circuit& c);
[[nodiscard]] std::vector<Gate> lower_to_hardware(const std::vector<Gate>& gates);

}  // namespace qroute

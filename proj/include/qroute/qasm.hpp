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

#include <stdexcept>
#include <string>
#include <string_view>

#include "qroute/circuit.hpp"

namespace qroute {

class QasmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * OpenQASM 2 text, one gate per line, angles with 17 significant digits.
 * Hardware export accepts h, x, sx, sxdg, s, sdg, rz, cx; `logical` adds
 * ry, crz, cp and swap.
 */
[[nodiscard]] std::string to_qasm(const Circuit& c, bool logical = false);

/// Reads the subset written by to_qasm (single qreg, numeric angles).
[[nodiscard]] Circuit parse_qasm(std::string_view text);

}  // namespace qroute

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
#include <string>
#include <utility>
#include <vector>

namespace qroute {

/// CNOT totals with a labelled breakdown that always sums to the total.
struct CostReport {
  std::int64_t total_cnots = 0;
  std::vector<std::pair<std::string, std::int64_t>> breakdown;
  std::optional<std::int64_t> baseline_cnots;
  std::optional<double> ratio;

  void add(std::string label, std::int64_t cnots) {
    breakdown.emplace_back(std::move(label), cnots);
    total_cnots += cnots;
  }

  void set_baseline(std::int64_t cnots) {
    baseline_cnots = cnots;
    ratio = total_cnots == 0 ? 0.0 : static_cast<double>(cnots) / static_cast<double>(total_cnots);
  }

  [[nodiscard]] bool consistent() const {
    std::int64_t s = 0;
    for (const auto& [label, v] : breakdown) s += v;
    return s == total_cnots;
  }
};

}  // namespace qroute

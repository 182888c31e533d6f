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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the edge-list reader; `line()` is 1-based.
class ParseError : public TopologyError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : TopologyError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using Edge = std::pair<Qubit, Qubit>;

/**
 * Undirected, simple, connected device graph.
 * The constructor enforces all three properties and throws TopologyError.
 */
class CouplingGraph {
 public:
  CouplingGraph() = default;
  CouplingGraph(std::size_t n, const std::vector<Edge>& edges);

  [[nodiscard]] std::size_t size() const { return adj_.size(); }
  /// Normalised (u < v), sorted edge list.
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<Qubit>& neighbors(Qubit v) const {
    return adj_.at(v);
  }
  [[nodiscard]] bool adjacent(Qubit a, Qubit b) const;
  [[nodiscard]] std::vector<std::size_t> distances_from(Qubit src) const;
  /// BFS shortest path, both endpoints included; neighbours visited in
  /// ascending order so ties resolve deterministically.
  [[nodiscard]] std::vector<Qubit> shortest_path(Qubit from, Qubit to) const;
  /// Subgraph induced by `nodes`, relabelled 0..k-1 in the given order.
  [[nodiscard]] CouplingGraph induced(const std::vector<Qubit>& nodes) const;

  bool operator==(const CouplingGraph& o) const { return edges_ == o.edges_ && size() == o.size(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Qubit>> adj_;
};

struct StationaryControl {
  Qubit qubit;
  std::size_t service_index;  // index into chain

  bool operator==(const StationaryControl&) const = default;
};

struct TopologySpec {
  std::string name;
  CouplingGraph graph;
  Qubit start = 0;
  std::vector<Qubit> chain;
  std::vector<StationaryControl> stationary;

  [[nodiscard]] std::size_t size() const { return graph.size(); }
};

/// Human-readable problems; empty means the TopologySpec is usable by the routers.
[[nodiscard]] std::vector<std::string> validate_spec(const TopologySpec& spec);

[[nodiscard]] CouplingGraph guadalupe16_graph();
[[nodiscard]] CouplingGraph falcon27_graph();

[[nodiscard]] TopologySpec guadalupe16();
[[nodiscard]] TopologySpec falcon27();
[[nodiscard]] TopologySpec lnn(std::size_t k);

/// "guadalupe16", "falcon27" or "lnnK"; throws TopologyError otherwise.
[[nodiscard]] TopologySpec builtin(std::string_view name);

[[nodiscard]] CouplingGraph load_custom(std::string_view text);
[[nodiscard]] CouplingGraph load_custom_file(const std::string& path);
[[nodiscard]] std::string to_edge_list_text(const CouplingGraph& g);

inline constexpr std::size_t kDefaultChainBudget = 1'000'000;

/**
 * Longest covering chain found by DFS from `start`. A chain covers the graph
 * when every node is on it or adjacent to it; off-chain nodes become
 * stationary controls at their first adjacent chain visit.
 */
[[nodiscard]] TopologySpec derive_chain(const CouplingGraph& g, Qubit start,
                                        std::size_t budget = kDefaultChainBudget);

/// Chain nodes interleaved with their stationaries, in forward visit order.
[[nodiscard]] std::vector<Qubit> service_order(const TopologySpec& spec);

}  // namespace qroute

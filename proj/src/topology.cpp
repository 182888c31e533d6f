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

#include "qroute/topology.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace qroute {

CouplingGraph::CouplingGraph(std::size_t n, const std::vector<Edge>& edges)
    : adj_(n) {
  if (n == 0) throw TopologyError("graph must have at least one qubit");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw TopologyError("edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") out of range for n=" +
                          std::to_string(n));
    }
    if (u == v) {
      throw TopologyError("self-loop on qubit " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw TopologyError("duplicate edge");
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  const auto d = distances_from(0);
  for (std::size_t v = 0; v < n; ++v) {
    if (d[v] == std::numeric_limits<std::size_t>::max()) {
      throw TopologyError("graph is disconnected (qubit " + std::to_string(v) +
                          " unreachable from 0)");
    }
  }
}

bool CouplingGraph::adjacent(Qubit a, Qubit b) const {
  if (a >= size() || b >= size()) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<std::size_t> CouplingGraph::distances_from(Qubit src) const {
  std::vector<std::size_t> d(size(), std::numeric_limits<std::size_t>::max());
  std::queue<Qubit> q;
  d.at(src) = 0;
  q.push(src);
  while (!q.empty()) {
    Qubit u = q.front();
    q.pop();
    for (Qubit v : adj_[u]) {
      if (d[v] == std::numeric_limits<std::size_t>::max()) {
        d[v] = d[u] + 1;
        q.push(v);
      }
    }
  }
  return d;
}

std::vector<Qubit> CouplingGraph::shortest_path(Qubit from, Qubit to) const {
  std::vector<Qubit> prev(size(), size());
  std::queue<Qubit> q;
  prev.at(from) = from;
  q.push(from);
  while (!q.empty() && prev.at(to) == size()) {
    Qubit u = q.front();
    q.pop();
    for (Qubit v : adj_[u]) {
      if (prev[v] == size()) {
        prev[v] = u;
        q.push(v);
      }
    }
  }
  std::vector<Qubit> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

CouplingGraph CouplingGraph::induced(const std::vector<Qubit>& nodes) const {
  std::vector<std::size_t> index(size(), size());
  for (std::size_t i = 0; i < nodes.size(); ++i) index.at(nodes[i]) = i;
  std::vector<Edge> es;
  for (auto [u, v] : edges_) {
    if (index[u] != size() && index[v] != size()) es.emplace_back(index[u], index[v]);
  }
  return CouplingGraph(nodes.size(), es);
}

std::vector<std::string> validate_spec(const TopologySpec& spec) {
  std::vector<std::string> out;
  const std::size_t n = spec.graph.size();
  if (spec.chain.empty()) {
    out.emplace_back("chain is empty");
    return out;
  }
  if (spec.start != spec.chain.front()) {
    out.push_back("start " + std::to_string(spec.start) +
                  " differs from chain[0] " + std::to_string(spec.chain.front()));
  }
  std::vector<int> seen(n, 0);
  auto mark = [&](Qubit q, const std::string& role) {
    if (q >= n) {
      out.push_back(role + " " + std::to_string(q) + " out of range");
      return;
    }
    if (seen[q]++ > 0) out.push_back("qubit " + std::to_string(q) + " listed twice");
  };
  for (std::size_t i = 0; i < spec.chain.size(); ++i) {
    mark(spec.chain[i], "chain node");
    if (i > 0 && !spec.graph.adjacent(spec.chain[i - 1], spec.chain[i])) {
      out.push_back("chain step " + std::to_string(spec.chain[i - 1]) + "-" +
                    std::to_string(spec.chain[i]) + " is not an edge");
    }
  }
  for (const auto& s : spec.stationary) {
    mark(s.qubit, "stationary control");
    if (s.service_index >= spec.chain.size()) {
      out.push_back("stationary " + std::to_string(s.qubit) +
                    " serviced at chain index " + std::to_string(s.service_index) +
                    " past the chain end");
    } else if (!spec.graph.adjacent(s.qubit, spec.chain[s.service_index])) {
      out.push_back("stationary " + std::to_string(s.qubit) +
                    " is not adjacent to chain node " +
                    std::to_string(spec.chain[s.service_index]));
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (seen[q] == 0) out.push_back("qubit " + std::to_string(q) + " not covered");
  }
  return out;
}

namespace {

const std::vector<Edge> kGuadalupeEdges = {
    {0, 1},  {1, 2},  {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},   {6, 7},
    {7, 10}, {8, 9},  {8, 11},  {10, 12}, {11, 14}, {12, 13}, {12, 15}, {13, 14}};

const std::vector<Edge> kFalconExtraEdges = {
    {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21}, {19, 20},
    {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};

std::size_t chain_index(const std::vector<Qubit>& chain, Qubit q) {
  return static_cast<std::size_t>(std::find(chain.begin(), chain.end(), q) -
                                  chain.begin());
}

TopologySpec make_spec(std::string name, CouplingGraph g, std::vector<Qubit> chain,
                       const std::vector<std::pair<Qubit, Qubit>>& stationary_at) {
  TopologySpec s;
  s.name = std::move(name);
  s.graph = std::move(g);
  s.start = chain.front();
  s.chain = std::move(chain);
  for (auto [q, at] : stationary_at) {
    s.stationary.push_back({q, chain_index(s.chain, at)});
  }
  return s;
}

}  // namespace

CouplingGraph guadalupe16_graph() { return CouplingGraph(16, kGuadalupeEdges); }

CouplingGraph falcon27_graph() {
  std::vector<Edge> es = kGuadalupeEdges;
  es.insert(es.end(), kFalconExtraEdges.begin(), kFalconExtraEdges.end());
  return CouplingGraph(27, es);
}

TopologySpec guadalupe16() {
  return make_spec("guadalupe16", guadalupe16_graph(),
                   {1, 4, 7, 10, 12, 13, 14, 11, 8, 5},
                   {{0, 1}, {2, 1}, {6, 7}, {15, 12}, {9, 8}, {3, 5}});
}

TopologySpec falcon27() {
  return make_spec(
      "falcon27", falcon27_graph(),
      {1, 4, 7, 10, 12, 15, 18, 21, 23, 24, 25, 22, 19, 16, 14, 11, 8, 5},
      {{0, 1}, {2, 1}, {6, 7}, {13, 12}, {17, 18}, {26, 25}, {20, 19}, {9, 8}, {3, 5}});
}

TopologySpec lnn(std::size_t k) {
  if (k < 2) throw TopologyError("lnn needs k >= 2");
  std::vector<Edge> es;
  std::vector<Qubit> chain(k);
  for (std::size_t i = 0; i < k; ++i) {
    chain[i] = i;
    if (i + 1 < k) es.emplace_back(i, i + 1);
  }
  return make_spec("lnn" + std::to_string(k), CouplingGraph(k, es), chain, {});
}

TopologySpec builtin(std::string_view name) {
  if (name == "guadalupe16") return guadalupe16();
  if (name == "falcon27") return falcon27();
  if (name.size() > 3 && name.substr(0, 3) == "lnn") {
    std::size_t k = 0;
    auto digits = name.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return lnn(k);
  }
  throw TopologyError("unknown topology '" + std::string(name) + "'");
}

CouplingGraph load_custom(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    std::vector<std::size_t> vals;
    for (const auto& t : tok) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + t + "'");
      }
      vals.push_back(v);
    }
    if (!n) {
      if (vals.size() != 1) throw ParseError(line_no, "first line must hold the qubit count");
      if (vals[0] == 0) throw ParseError(line_no, "qubit count must be positive");
      n = vals[0];
      continue;
    }
    if (vals.size() != 2) throw ParseError(line_no, "expected 'u v'");
    if (vals[0] == vals[1]) {
      throw ParseError(line_no, "self-loop on qubit " + std::to_string(vals[0]));
    }
    if (vals[0] >= *n || vals[1] >= *n) {
      throw ParseError(line_no, "qubit index out of range for n=" + std::to_string(*n));
    }
    edges.emplace_back(vals[0], vals[1]);
  }
  if (!n) throw ParseError(line_no, "missing qubit count");
  return CouplingGraph(*n, edges);
}

CouplingGraph load_custom_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw TopologyError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_custom(ss.str());
}

std::string to_edge_list_text(const CouplingGraph& g) {
  std::ostringstream os;
  os << g.size() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

namespace {

class ChainSearch {
 public:
  ChainSearch(const CouplingGraph& g, std::size_t budget)
      : g_(g), budget_(budget), on_path_(g.size(), false), cover_(g.size(), 0) {}

  std::vector<Qubit> run(Qubit start) {
    push(start);
    dfs();
    return best_;
  }

 private:
  void push(Qubit v) {
    path_.push_back(v);
    on_path_[v] = true;
    if (cover_[v]++ == 0) ++covered_;
    for (Qubit w : g_.neighbors(v)) {
      if (cover_[w]++ == 0) ++covered_;
    }
  }

  void pop() {
    Qubit v = path_.back();
    path_.pop_back();
    on_path_[v] = false;
    if (--cover_[v] == 0) --covered_;
    for (Qubit w : g_.neighbors(v)) {
      if (--cover_[w] == 0) --covered_;
    }
  }

  void dfs() {
    if (covered_ == g_.size() && path_.size() > best_.size()) best_ = path_;
    if (best_.size() == g_.size()) return;
    for (Qubit w : g_.neighbors(path_.back())) {
      if (on_path_[w] || expansions_ >= budget_) continue;
      ++expansions_;
      push(w);
      dfs();
      pop();
      if (best_.size() == g_.size()) return;
    }
  }

  const CouplingGraph& g_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::vector<Qubit> path_;
  std::vector<Qubit> best_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> cover_;
  std::size_t covered_ = 0;
};

}  // namespace

TopologySpec derive_chain(const CouplingGraph& g, Qubit start, std::size_t budget) {
  if (start >= g.size()) throw TopologyError("start qubit out of range");
  auto chain = ChainSearch(g, budget).run(start);
  if (chain.empty()) {
    throw TopologyError("no valid spec: no chain from " + std::to_string(start) +
                        " reaches every qubit within the search budget");
  }
  TopologySpec spec;
  spec.name = "derived";
  spec.graph = g;
  spec.start = start;
  spec.chain = chain;
  std::vector<bool> on_chain(g.size(), false);
  for (Qubit q : chain) on_chain[q] = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (Qubit w : g.neighbors(chain[i])) {
      if (!on_chain[w]) {
        spec.stationary.push_back({w, i});
        on_chain[w] = true;
      }
    }
  }
  return spec;
}

std::vector<Qubit> service_order(const TopologySpec& spec) {
  std::vector<Qubit> order;
  for (std::size_t i = 0; i < spec.chain.size(); ++i) {
    order.push_back(spec.chain[i]);
    for (const auto& s : spec.stationary) {
      if (s.service_index == i) order.push_back(s.qubit);
    }
  }
  return order;
}

}  // namespace qroute

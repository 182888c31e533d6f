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

#include "qroute/qft.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

#include "qroute/rewrite.hpp"
#include "qroute/simulator.hpp"

namespace qroute {

namespace {

// Repositioning tables, 1-based labels, one row per cascade.
const std::vector<std::vector<int>> kTable16 = {
    {2, 1, 3, 13, 4, 12, 16, 5, 11, 14, 6, 10, 7, 8, 9, 15},
    {2, 4, 3, 1, 5, 13, 16, 6, 12, 14, 7, 11, 8, 9, 10, 15},
    {4, 5, 3, 1, 6, 2, 16, 7, 13, 14, 8, 12, 9, 10, 11, 15},
    {4, 6, 5, 1, 7, 2, 16, 8, 14, 3, 9, 13, 10, 11, 12, 15},
    {6, 7, 5, 1, 8, 2, 16, 9, 4, 3, 10, 14, 11, 12, 13, 15},
    {6, 8, 7, 1, 9, 2, 16, 10, 4, 3, 11, 5, 12, 13, 14, 15},
    {8, 9, 7, 1, 10, 2, 16, 11, 4, 3, 12, 5, 13, 14, 6, 15},
    {8, 10, 9, 1, 11, 2, 16, 12, 4, 3, 13, 5, 14, 7, 6, 15},
    {10, 11, 9, 1, 12, 2, 16, 13, 4, 3, 14, 5, 15, 7, 6, 8},
    {10, 12, 11, 1, 13, 2, 16, 14, 4, 3, 15, 5, 9, 7, 6, 8},
    {12, 13, 11, 1, 14, 2, 16, 15, 4, 3, 10, 5, 9, 7, 6, 8},
    {12, 14, 13, 1, 15, 2, 11, 16, 4, 3, 10, 5, 9, 7, 6, 8},
    {14, 15, 13, 1, 16, 2, 11, 12, 4, 3, 10, 5, 9, 7, 6, 8},
    {13, 14, 15, 1, 16, 2, 11, 12, 4, 3, 10, 5, 9, 7, 6, 8},
    {13, 15, 14, 1, 16, 2, 11, 12, 4, 3, 10, 5, 9, 7, 6, 8},
};

const std::vector<std::vector<int>> kTable27 = {
    {2, 1, 3, 21, 4, 20, 27, 5, 19, 22, 6, 18, 7, 26, 17, 8, 16, 25, 9, 15, 23, 10, 14, 11, 12, 13, 24},
    {2, 4, 3, 1, 5, 21, 27, 6, 20, 22, 7, 19, 8, 26, 18, 9, 17, 25, 10, 16, 23, 11, 15, 12, 13, 14, 24},
    {4, 5, 3, 1, 6, 2, 27, 7, 21, 22, 8, 20, 9, 26, 19, 10, 18, 25, 11, 17, 23, 12, 16, 13, 14, 15, 24},
    {4, 6, 5, 1, 7, 2, 27, 8, 22, 3, 9, 21, 10, 26, 20, 11, 19, 25, 12, 18, 23, 13, 17, 14, 15, 16, 24},
    {6, 7, 5, 1, 8, 2, 27, 9, 4, 3, 10, 22, 11, 26, 21, 12, 20, 25, 13, 19, 23, 14, 18, 15, 16, 17, 24},
    {6, 8, 7, 1, 9, 2, 27, 10, 4, 3, 11, 5, 12, 26, 22, 13, 21, 25, 14, 20, 23, 15, 19, 16, 17, 18, 24},
    {8, 9, 7, 1, 10, 2, 27, 11, 4, 3, 12, 5, 13, 26, 6, 14, 22, 25, 15, 21, 23, 16, 20, 17, 18, 19, 24},
    {8, 10, 9, 1, 11, 2, 27, 12, 4, 3, 13, 5, 14, 26, 6, 15, 7, 25, 16, 22, 23, 17, 21, 18, 19, 20, 24},
    {10, 11, 9, 1, 12, 2, 27, 13, 4, 3, 14, 5, 15, 26, 6, 16, 7, 25, 17, 23, 8, 18, 22, 19, 20, 21, 24},
    {10, 12, 11, 1, 13, 2, 27, 14, 4, 3, 15, 5, 16, 26, 6, 17, 7, 25, 18, 9, 8, 19, 23, 20, 21, 22, 24},
    {12, 13, 11, 1, 14, 2, 27, 15, 4, 3, 16, 5, 17, 26, 6, 18, 7, 25, 19, 9, 8, 20, 10, 21, 22, 23, 24},
    {12, 14, 13, 1, 15, 2, 27, 16, 4, 3, 17, 5, 18, 26, 6, 19, 7, 25, 20, 9, 8, 21, 10, 22, 23, 24, 11},
    {14, 15, 13, 1, 16, 2, 27, 17, 4, 3, 18, 5, 19, 26, 6, 20, 7, 25, 21, 9, 8, 22, 10, 23, 24, 12, 11},
    {14, 16, 15, 1, 17, 2, 27, 18, 4, 3, 19, 5, 20, 26, 6, 21, 7, 25, 22, 9, 8, 23, 10, 24, 13, 12, 11},
    {16, 17, 15, 1, 18, 2, 27, 19, 4, 3, 20, 5, 21, 26, 6, 22, 7, 25, 23, 9, 8, 24, 10, 14, 13, 12, 11},
    {16, 18, 17, 1, 19, 2, 27, 20, 4, 3, 21, 5, 22, 26, 6, 23, 7, 25, 24, 9, 8, 15, 10, 14, 13, 12, 11},
    {18, 19, 17, 1, 20, 2, 27, 21, 4, 3, 22, 5, 23, 26, 6, 24, 7, 16, 25, 9, 8, 15, 10, 14, 13, 12, 11},
    {18, 20, 19, 1, 21, 2, 27, 22, 4, 3, 23, 5, 24, 26, 6, 25, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {20, 21, 19, 1, 22, 2, 27, 23, 4, 3, 24, 5, 25, 26, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {20, 22, 21, 1, 23, 2, 27, 24, 4, 3, 25, 5, 26, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {22, 23, 21, 1, 24, 2, 27, 25, 4, 3, 26, 5, 20, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {22, 24, 23, 1, 25, 2, 27, 26, 4, 3, 21, 5, 20, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {24, 25, 23, 1, 26, 2, 22, 27, 4, 3, 21, 5, 20, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {24, 26, 25, 1, 27, 2, 22, 23, 4, 3, 21, 5, 20, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {26, 25, 24, 1, 27, 2, 22, 23, 4, 3, 21, 5, 20, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
    {26, 27, 24, 1, 25, 2, 22, 23, 4, 3, 21, 5, 20, 19, 6, 18, 7, 16, 17, 9, 8, 15, 10, 14, 13, 12, 11},
};

double cp_angle(std::int64_t distance) { return kPi / std::ldexp(1.0, static_cast<int>(distance)); }

std::string qname(std::int64_t label) { return "q" + std::to_string(label + 1); }

}  // namespace

Circuit reference_qft(std::size_t n) {
  if (n < 1) throw ScheduleError("QFT needs at least one qubit");
  Circuit c(n);
  for (std::size_t j = 0; j < n; ++j) {
    c.append(Gate::h(j));
    for (std::size_t m = 1; j + m < n; ++m) c.append(Gate::cp(j + m, j, cp_angle(m)));
  }
  return c;
}

QftSchedule builtin_schedule(std::string_view device) {
  const std::vector<std::vector<int>>* table = nullptr;
  if (device == "guadalupe16") table = &kTable16;
  if (device == "falcon27") table = &kTable27;
  if (table == nullptr) throw ScheduleError("no built-in schedule for '" + std::string(device) + "'");
  QftSchedule s;
  s.device = builtin(device);
  s.n = s.device.size();
  for (const auto& r : *table) {
    ScheduleRow row;
    for (int q : r) row.push_back(q - 1);
    s.rows.push_back(std::move(row));
  }
  return s;
}

QftSchedule parse_schedule(std::string_view text, const std::optional<TopologySpec>& device) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  QftSchedule s;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& what) {
      return ScheduleError("schedule line " + std::to_string(line_no) + ": " + what);
    };
    if (!header) {
      std::string compact;
      for (char ch : line) {
        if (ch != ' ' && ch != '\t' && ch != '\r') compact += ch;
      }
      const auto dev = compact.find("device=");
      if (compact.rfind("n=", 0) != 0 || dev == std::string::npos) {
        throw fail("expected header 'n= K device=NAME'");
      }
      try {
        s.n = std::stoul(compact.substr(2, dev - 2));
      } catch (const std::exception&) {
        throw fail("bad qubit count");
      }
      const std::string name = compact.substr(dev + 7);
      try {
        s.device = device ? *device : builtin(name);
      } catch (const TopologyError& e) {
        throw fail(e.what());
      }
      header = true;
      continue;
    }
    ScheduleRow row;
    std::stringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) {
      cell.erase(0, cell.find_first_not_of(" \t\r"));
      cell.erase(cell.find_last_not_of(" \t\r") + 1);
      if (cell == "-") {
        row.push_back(kIdle);
        continue;
      }
      try {
        std::size_t used = 0;
        const long v = std::stol(cell, &used);
        if (used != cell.size() || v < 1) throw fail("bad label '" + cell + "'");
        row.push_back(v - 1);
      } catch (const ScheduleError&) {
        throw;
      } catch (const std::exception&) {
        throw fail("bad label '" + cell + "'");
      }
    }
    s.rows.push_back(std::move(row));
  }
  if (!header) throw ScheduleError("schedule has no header");
  return s;
}

std::string to_schedule_text(const QftSchedule& s) {
  std::ostringstream os;
  os << "n= " << s.n << " device=" << s.device.name << "\n";
  for (const auto& row : s.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      if (row[i] == kIdle) {
        os << "-";
      } else {
        os << row[i] + 1;
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

struct CascadePlan {
  std::vector<Qubit> walk;
  // statics[k]: labels served in place while the target sits at walk[k].
  std::vector<std::vector<std::int64_t>> statics;
  std::vector<ScheduleDiagnostic> problems;
};

std::vector<std::int64_t> positions_of(const ScheduleRow& row, std::size_t n) {
  std::vector<std::int64_t> pos(n, kIdle);
  for (std::size_t x = 0; x < row.size(); ++x) {
    if (row[x] != kIdle) pos[static_cast<std::size_t>(row[x])] = static_cast<std::int64_t>(x);
  }
  return pos;
}

// `row_number` is the 1-based number of `row`.
CascadePlan plan_cascade(const CouplingGraph& g, std::size_t n, const ScheduleRow& row,
                         const ScheduleRow* next, std::int64_t t, std::size_t row_number) {
  CascadePlan plan;
  const auto pos = positions_of(row, n);
  Qubit p = static_cast<Qubit>(pos[static_cast<std::size_t>(t)]);
  plan.walk.push_back(p);
  if (next != nullptr) {
    const auto end = static_cast<Qubit>(positions_of(*next, n)[static_cast<std::size_t>(t)]);
    while (p != end && plan.walk.size() <= row.size()) {
      const std::int64_t q = (*next)[p];
      if (q == kIdle) {
        plan.problems.push_back({row_number + 1, p,
                                 "walk of " + qname(t) + " would leave position " +
                                     std::to_string(p) + " idle"});
        break;
      }
      const auto from = static_cast<Qubit>(pos[static_cast<std::size_t>(q)]);
      if (!g.adjacent(p, from)) {
        plan.problems.push_back({row_number + 1, p,
                                 qname(q) + " moves " + std::to_string(from) + "->" +
                                     std::to_string(p) + ", not an edge"});
        break;
      }
      plan.walk.push_back(from);
      p = from;
    }
    ScheduleRow after = row;
    for (std::size_t k = 0; k + 1 < plan.walk.size(); ++k) {
      std::swap(after[plan.walk[k]], after[plan.walk[k + 1]]);
    }
    if (plan.problems.empty()) {
      for (std::size_t x = 0; x < row.size(); ++x) {
        if (after[x] != (*next)[x]) {
          plan.problems.push_back(
              {row_number + 1, x,
               "row differs from a single walk of " + qname(t) + " (expected " +
                   (after[x] == kIdle ? std::string("-") : qname(after[x])) + ")"});
        }
      }
    }
  }
  plan.statics.assign(plan.walk.size(), {});
  std::vector<bool> moved(row.size(), false);
  for (std::size_t k = 1; k < plan.walk.size(); ++k) moved[plan.walk[k]] = true;
  for (std::int64_t j = t + 1; j < static_cast<std::int64_t>(n); ++j) {
    const auto pj = static_cast<Qubit>(pos[static_cast<std::size_t>(j)]);
    if (moved[pj]) continue;
    bool placed = false;
    for (std::size_t k = 0; k < plan.walk.size() && !placed; ++k) {
      if (g.adjacent(plan.walk[k], pj)) {
        plan.statics[k].push_back(j);
        placed = true;
      }
    }
    if (!placed) {
      plan.problems.push_back({row_number, pj,
                               "CP(" + qname(j) + "," + qname(t) +
                                   ") needs a neighbour of the walk but " + qname(j) +
                                   " sits at position " + std::to_string(pj)});
    }
  }
  return plan;
}

std::vector<ScheduleDiagnostic> check_rows(const QftSchedule& s) {
  std::vector<ScheduleDiagnostic> out;
  const std::size_t width = s.device.size();
  if (s.n < 1 || s.n > width) {
    out.push_back({0, 0, "n = " + std::to_string(s.n) + " does not fit the device"});
    return out;
  }
  if (s.rows.empty()) out.push_back({0, 0, "schedule has no rows"});
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    const auto& row = s.rows[r];
    if (row.size() != width) {
      out.push_back({r + 1, 0, "row has " + std::to_string(row.size()) + " cells, device has " +
                                   std::to_string(width)});
      continue;
    }
    std::vector<int> count(s.n, 0);
    for (std::size_t x = 0; x < width; ++x) {
      if (row[x] == kIdle) continue;
      if (row[x] < 0 || row[x] >= static_cast<std::int64_t>(s.n)) {
        out.push_back({r + 1, x, "label out of range"});
      } else if (count[static_cast<std::size_t>(row[x])]++ > 0) {
        out.push_back({r + 1, x, qname(row[x]) + " placed twice"});
      }
    }
    for (std::size_t q = 0; q < s.n; ++q) {
      if (count[q] == 0) out.push_back({r + 1, 0, qname(static_cast<std::int64_t>(q)) + " missing"});
    }
  }
  return out;
}

}  // namespace

std::vector<ScheduleDiagnostic> validate_schedule(const QftSchedule& s) {
  auto out = check_rows(s);
  if (!out.empty()) return out;
  ScheduleRow cur = s.rows.front();
  for (std::size_t t = 0; t < s.n; ++t) {
    const ScheduleRow& row = t < s.rows.size() ? s.rows[t] : cur;
    const ScheduleRow* next = t + 1 < s.rows.size() ? &s.rows[t + 1] : nullptr;
    auto plan = plan_cascade(s.device.graph, s.n, row, next, static_cast<std::int64_t>(t), t + 1);
    out.insert(out.end(), plan.problems.begin(), plan.problems.end());
    if (next != nullptr) cur = *next;
  }
  return out;
}

QftExecution execute_schedule(const QftSchedule& s) {
  if (auto problems = check_rows(s); !problems.empty()) {
    throw ScheduleError("row " + std::to_string(problems.front().row) + ": " +
                        problems.front().message);
  }
  const std::size_t width = s.device.size();
  QftExecution ex;
  ex.trace = Circuit(width, Space::Logical);
  ex.circuit = Circuit(width, Space::Physical);
  ScheduleRow cur = s.rows.front();
  ex.initial_layout.resize(s.n);
  for (std::size_t x = 0; x < width; ++x) {
    if (cur[x] != kIdle) ex.initial_layout[static_cast<std::size_t>(cur[x])] = x;
  }
  for (std::size_t t = 0; t < s.n; ++t) {
    if (t < s.rows.size() && s.rows[t] != cur) {
      throw ScheduleError("row " + std::to_string(t + 1) +
                          " disagrees with the placement left by the previous cascade");
    }
    const ScheduleRow* next = t + 1 < s.rows.size() ? &s.rows[t + 1] : nullptr;
    const auto ti = static_cast<std::int64_t>(t);
    auto plan = plan_cascade(s.device.graph, s.n, cur, next, ti, t + 1);
    if (!plan.problems.empty()) {
      const auto& d = plan.problems.front();
      throw ScheduleError("cascade " + std::to_string(t + 1) + ", row " + std::to_string(d.row) +
                          ", position " + std::to_string(d.position) + ": " + d.message);
    }
    std::vector<Gate> seg;
    seg.push_back(Gate::h(plan.walk.front()));
    for (std::size_t k = 0; k < plan.walk.size(); ++k) {
      const Qubit here = plan.walk[k];
      for (std::int64_t j : plan.statics[k]) {
        const auto pj = static_cast<Qubit>(positions_of(cur, s.n)[static_cast<std::size_t>(j)]);
        seg.push_back(Gate::cp(pj, here, cp_angle(j - ti)));
      }
      if (k + 1 < plan.walk.size()) {
        const Qubit there = plan.walk[k + 1];
        if (cur[there] > ti) seg.push_back(Gate::cp(there, here, cp_angle(cur[there] - ti)));
        seg.push_back(Gate::swap(here, there));
        std::swap(cur[here], cur[there]);
      }
    }
    auto lowered = lower_to_hardware(seg);
    ex.cost.add("cascade " + std::to_string(t + 1), static_cast<std::int64_t>(cnot_count(lowered)));
    ex.trace.append(seg);
    ex.circuit.append(lowered);
    ex.walks.push_back(plan.walk);
  }
  ex.final_layout.resize(s.n);
  for (std::size_t x = 0; x < width; ++x) {
    if (cur[x] != kIdle) ex.final_layout[static_cast<std::size_t>(cur[x])] = x;
  }
  return ex;
}

std::int64_t greedy_cost_bound(std::size_t n) {
  const auto k = static_cast<std::int64_t>(n);
  return 3 * k * (k - 1) / 2 + 3 * (k - 1);
}

namespace {

class GreedyScheduler {
 public:
  GreedyScheduler(std::size_t n, const TopologySpec& spec) : n_(n), spec_(spec), tree_(spec.size()) {
    auto order = service_order(spec);
    order_.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i + 1 < spec.chain.size(); ++i) {
      tree_[spec.chain[i]].push_back(spec.chain[i + 1]);
      tree_[spec.chain[i + 1]].push_back(spec.chain[i]);
    }
    for (const auto& st : spec.stationary) {
      tree_[st.qubit].push_back(spec.chain[st.service_index]);
      tree_[spec.chain[st.service_index]].push_back(st.qubit);
    }
    // Retirement slots: service order reversed; rank = index in that list.
    rank_.assign(spec.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[order_.size() - 1 - i]] = i;
  }

  QftSchedule run(std::size_t tail) {
    ScheduleRow lay = initial_row();
    QftSchedule s{n_, {lay}, spec_};
    for (std::size_t t = 0; t < n_; ++t) {
      if (t + tail >= n_) {
        auto best = search(lay, t);
        if (!best) throw ScheduleError("greedy schedule found no valid tail");
        s.rows.insert(s.rows.end(), best->rows.begin(), best->rows.end());
        break;
      }
      const Qubit p = position(lay, t);
      auto r = evaluate(lay, t, tree_path(p, slot_for(t)));
      if (!r || r->pure > 0) {
        std::optional<Eval> best;
        std::pair<std::int64_t, std::size_t> best_key{};
        for (Qubit slot : order_) {
          auto cand = evaluate(lay, t, tree_path(p, slot));
          if (!cand) continue;
          const std::pair<std::int64_t, std::size_t> key{cand->cost, rank_[slot]};
          if (!best || key < best_key) {
            best = cand;
            best_key = key;
          }
        }
        if (!best) throw ScheduleError("greedy schedule: no valid walk for cascade " + std::to_string(t + 1));
        r = best;
      }
      lay = r->after;
      s.rows.push_back(lay);
    }
    return s;
  }

 private:
  struct Eval {
    std::int64_t cost = 0;
    std::size_t pure = 0;
    ScheduleRow after;
  };

  struct Tail {
    std::int64_t total = 0;
    std::vector<std::size_t> ranks;
    std::vector<ScheduleRow> rows;
  };

  Qubit slot_for(std::size_t t) const { return order_[order_.size() - 1 - t]; }

  static Qubit position(const ScheduleRow& lay, std::size_t t) {
    return static_cast<Qubit>(std::find(lay.begin(), lay.end(), static_cast<std::int64_t>(t)) - lay.begin());
  }

  // Labels: chain head, its stationaries, the rest of the chain, the
  // stationaries of the chain tail, then everything else from the far end.
  ScheduleRow initial_row() const {
    std::vector<bool> used(spec_.size(), false);
    for (Qubit q : order_) used[q] = true;
    std::vector<Qubit> chain;
    for (Qubit c : spec_.chain) {
      if (used[c]) chain.push_back(c);
    }
    auto sides = [&](Qubit at) {
      std::vector<Qubit> out;
      for (const auto& st : spec_.stationary) {
        if (used[st.qubit] && spec_.chain[st.service_index] == at) out.push_back(st.qubit);
      }
      return out;
    };
    std::vector<Qubit> labels{chain.front()};
    for (Qubit q : sides(chain.front())) labels.push_back(q);
    labels.insert(labels.end(), chain.begin() + 1, chain.end());
    if (chain.size() > 1) {
      for (Qubit q : sides(chain.back())) labels.push_back(q);
    }
    std::vector<Qubit> rest;
    for (Qubit q : order_) {
      if (std::find(labels.begin(), labels.end(), q) == labels.end()) rest.push_back(q);
    }
    labels.insert(labels.end(), rest.rbegin(), rest.rend());
    ScheduleRow row(spec_.size(), kIdle);
    for (std::size_t i = 0; i < labels.size(); ++i) row[labels[i]] = static_cast<std::int64_t>(i);
    return row;
  }

  std::vector<Qubit> tree_path(Qubit from, Qubit to) const {
    std::vector<Qubit> prev(tree_.size(), tree_.size());
    std::queue<Qubit> q;
    prev[from] = from;
    q.push(from);
    while (!q.empty()) {
      Qubit u = q.front();
      q.pop();
      for (Qubit v : tree_[u]) {
        if (prev[v] == tree_.size()) {
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

  std::optional<Eval> evaluate(const ScheduleRow& lay, std::size_t t, const std::vector<Qubit>& path) const {
    const auto ti = static_cast<std::int64_t>(t);
    Eval e;
    e.after = lay;
    std::vector<bool> served(n_, false);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const std::int64_t q = e.after[path[k + 1]];
      e.cost += 3;
      if (q > ti) {
        served[static_cast<std::size_t>(q)] = true;
      } else {
        ++e.pure;
      }
      std::swap(e.after[path[k]], e.after[path[k + 1]]);
    }
    for (Qubit x = 0; x < e.after.size(); ++x) {
      const std::int64_t q = e.after[x];
      if (q <= ti || served[static_cast<std::size_t>(q)]) continue;
      const bool touches = std::any_of(path.begin(), path.end(),
                                       [&](Qubit y) { return spec_.graph.adjacent(x, y); });
      if (!touches) return std::nullopt;
      e.cost += 2;
    }
    return e;
  }

  std::optional<Tail> search(const ScheduleRow& lay, std::size_t t) const {
    if (t >= n_) return Tail{};
    const Qubit p = position(lay, t);
    std::optional<Tail> best;
    for (Qubit slot : order_) {
      auto r = evaluate(lay, t, tree_path(p, slot));
      if (!r) continue;
      auto sub = search(r->after, t + 1);
      if (!sub) continue;
      Tail cand;
      cand.total = r->cost + sub->total;
      cand.ranks.push_back(rank_[slot]);
      cand.ranks.insert(cand.ranks.end(), sub->ranks.begin(), sub->ranks.end());
      cand.rows.push_back(r->after);
      cand.rows.insert(cand.rows.end(), sub->rows.begin(), sub->rows.end());
      if (!best || std::tie(cand.total, cand.ranks) < std::tie(best->total, best->ranks)) {
        best = std::move(cand);
      }
    }
    return best;
  }

  std::size_t n_;
  const TopologySpec& spec_;
  std::vector<std::vector<Qubit>> tree_;
  std::vector<Qubit> order_;
  std::vector<std::size_t> rank_;
};

}  // namespace

QftSchedule greedy_schedule(std::size_t n, const TopologySpec& spec) {
  if (n < 1) throw ScheduleError("greedy schedule needs n >= 1");
  if (n > spec.size()) {
    throw ScheduleError("n = " + std::to_string(n) + " exceeds the device size " +
                        std::to_string(spec.size()));
  }
  if (auto problems = validate_spec(spec); !problems.empty()) {
    throw ScheduleError("invalid topology spec: " + problems.front());
  }
  return GreedyScheduler(n, spec).run(3);
}

StructuralReport verify_structural(const Circuit& trace, const Layout& initial_layout,
                                   std::size_t n) {
  StructuralReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.diff.push_back(std::move(msg));
  };
  std::vector<std::int64_t> at(trace.width(), kIdle);
  for (std::size_t q = 0; q < initial_layout.size(); ++q) {
    if (initial_layout[q] >= trace.width()) {
      fail("initial layout places " + qname(static_cast<std::int64_t>(q)) + " off the circuit");
      return rep;
    }
    at[initial_layout[q]] = static_cast<std::int64_t>(q);
  }
  std::vector<std::vector<std::size_t>> h_at(n);
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> cp_at;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Gate& g = trace.gates()[i];
    auto logical = [&](Qubit w) { return w < at.size() ? at[w] : kIdle; };
    switch (g.kind) {
      case GateKind::H: {
        const auto a = logical(g.wires[0]);
        if (a == kIdle || a >= static_cast<std::int64_t>(n)) {
          fail("gate " + std::to_string(i) + ": H on idle wire " + std::to_string(g.wires[0]));
        } else {
          h_at[static_cast<std::size_t>(a)].push_back(i);
        }
        break;
      }
      case GateKind::CP: {
        auto a = logical(g.wires[0]), b = logical(g.wires[1]);
        if (a == kIdle || b == kIdle) {
          fail("gate " + std::to_string(i) + ": CP touches an idle wire");
          break;
        }
        if (a < b) std::swap(a, b);
        const double want = cp_angle(a - b);
        if (!g.angle.approx_equal(Angle(want))) {
          std::ostringstream os;
          os.precision(17);
          os << "CP(" << qname(a) << "," << qname(b) << "): angle " << g.angle.radians()
             << ", expected " << want;
          fail(os.str());
        }
        cp_at[{a, b}].push_back(i);
        break;
      }
      case GateKind::Swap:
        std::swap(at.at(g.wires[0]), at.at(g.wires[1]));
        break;
      default:
        fail("gate " + std::to_string(i) + ": unexpected " + g.to_string());
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (h_at[q].size() != 1) {
      fail(qname(static_cast<std::int64_t>(q)) + ": " + std::to_string(h_at[q].size()) +
           " Hadamards, expected 1");
    }
  }
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    for (std::int64_t b = 0; b < a; ++b) {
      const auto it = cp_at.find({a, b});
      const std::size_t count = it == cp_at.end() ? 0 : it->second.size();
      if (count != 1) {
        fail("CP(" + qname(a) + "," + qname(b) + "): " + std::to_string(count) +
             " occurrences, expected 1");
        continue;
      }
      const std::size_t idx = it->second.front();
      const auto& hb = h_at[static_cast<std::size_t>(b)];
      const auto& ha = h_at[static_cast<std::size_t>(a)];
      if (hb.size() == 1 && idx < hb.front()) {
        fail("CP(" + qname(a) + "," + qname(b) + ") at gate " + std::to_string(idx) +
             " precedes H(" + qname(b) + ")");
      }
      if (ha.size() == 1 && idx > ha.front()) {
        fail("CP(" + qname(a) + "," + qname(b) + ") at gate " + std::to_string(idx) +
             " follows H(" + qname(a) + ")");
      }
    }
  }
  for (const auto& [pair, idx] : cp_at) {
    if (pair.first >= static_cast<std::int64_t>(n)) {
      fail("CP on unknown logical qubit " + qname(pair.first));
    }
  }
  return rep;
}

bool verify_unitary(const QftExecution& ex, std::size_t n, double tol) {
  if (n > kUnitaryMaxQubits) throw SimulationError("unitary check capped at 10 qubits");
  const std::size_t width = ex.circuit.width();
  std::vector<Qubit> occupied(ex.initial_layout.begin(), ex.initial_layout.end());
  std::sort(occupied.begin(), occupied.end());
  std::vector<Qubit> compact(width, width);
  for (std::size_t i = 0; i < occupied.size(); ++i) compact[occupied[i]] = i;
  for (const Gate& g : ex.circuit.gates()) {
    for (std::size_t k = 0; k < g.arity(); ++k) {
      if (compact[g.wires[k]] == width) return false;
    }
  }
  const auto routed = unitary_of(relabel(ex.circuit, compact, n));
  std::vector<Qubit> start(n), perm(n);
  for (std::size_t q = 0; q < n; ++q) {
    start[q] = compact[ex.initial_layout[q]];
    perm[start[q]] = compact[ex.final_layout[q]];
  }
  const auto reference = unitary_of(relabel(reference_qft(n), start, n));
  return equivalent_up_to_perm_phase(reference, routed, perm, tol);
}

std::string schedule_diagnostics_text(const QftSchedule& s, std::string_view label) {
  std::ostringstream os;
  os << "# " << label << ": n=" << s.n << " device=" << s.device.name << " rows=" << s.rows.size()
     << "\n";
  const auto diags = validate_schedule(s);
  if (diags.empty()) {
    os << "adjacency: no flagged cells\n";
  } else {
    for (const auto& d : diags) {
      os << "flagged row=" << d.row << " position=" << d.position << " : " << d.message << "\n";
    }
    return os.str();
  }
  const auto ex = execute_schedule(s);
  for (const auto& [name, v] : ex.cost.breakdown) os << name << " = " << v << "\n";
  os << "total = " << ex.cost.total_cnots << "\n";
  return os.str();
}

}  // namespace qroute

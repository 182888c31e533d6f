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

#include "qroute/hash.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qroute/rewrite.hpp"
#include "qroute/simulator.hpp"

namespace qroute {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate(const HashParams& hp) {
  if (hp.p < 3 || !is_prime(hp.p)) {
    throw HashError("p = " + std::to_string(hp.p) + " is not an odd prime");
  }
  if (hp.m < 2) throw HashError("width m must be at least 2");
  if (hp.m > 63) throw HashError("width m is too large");
  if (hp.xi.size() != hp.m) {
    throw HashError("expected " + std::to_string(hp.m) + " angles, got " +
                    std::to_string(hp.xi.size()));
  }
}

EffectiveK effective_k(const HashParams& hp) {
  validate(hp);
  EffectiveK k;
  k.thetas.resize(hp.branches());
  for (std::size_t j = 0; j < k.thetas.size(); ++j) {
    double t = hp.xi[0];
    for (std::size_t i = 0; i < hp.controls(); ++i) {
      if (j & (std::size_t{1} << i)) t += hp.xi[i + 1];
    }
    k.thetas[j] = t;
  }
  return k;
}

double accept_prob(const HashParams& hp, std::int64_t l) {
  validate(hp);
  if (hp.m - 1 > 20) throw HashError("closed form limited to 2^20 branches");
  const auto k = effective_k(hp);
  double s = 0.0;
  for (double t : k.thetas) s += std::cos(static_cast<double>(l) * t);
  s /= static_cast<double>(k.thetas.size());
  return s * s;
}

double accept_prob(const HashParams& hp) {
  return accept_prob(hp, static_cast<std::int64_t>(hp.l));
}

double error_bound(const HashParams& hp) {
  double eps = 0.0;
  for (std::uint64_t l = 1; l < hp.p; ++l) {
    eps = std::max(eps, accept_prob(hp, static_cast<std::int64_t>(l)));
  }
  return eps;
}

std::vector<double> default_angles(std::uint64_t p, std::size_t m) {
  std::vector<double> xi(m);
  for (std::size_t i = 0; i < m; ++i) {
    xi[i] = kTwoPi * static_cast<double>(i % (p - 1) + 1) / static_cast<double>(p);
  }
  return xi;
}

AngleSearchResult search_angles(std::uint64_t p, std::size_t m, std::size_t budget,
                                std::uint64_t seed) {
  if (m < 2) throw HashError("width m must be at least 2");
  if (budget < 1) throw HashError("budget must be at least 1");
  HashParams hp{p, m, std::vector<double>(m, 0.0), 0};
  validate(hp);
  // Raw engine output reduced modulo p: the std distributions are not
  // bit-reproducible across standard libraries.
  std::mt19937_64 rng(seed);
  AngleSearchResult best;
  best.eps = 2.0;
  for (std::size_t trial = 0; trial < budget; ++trial) {
    for (std::size_t i = 0; i < m; ++i) {
      hp.xi[i] = kTwoPi * static_cast<double>(rng() % p) / static_cast<double>(p);
    }
    const double eps = error_bound(hp);
    if (eps < best.eps) {
      best.eps = eps;
      best.xi = hp.xi;
    }
  }
  best.trials = budget;
  return best;
}

namespace {

// Angle of a controlled rotation by phi. CRz(phi) has period 4*pi while
// Angle keeps only phi mod 2*pi; `wrap` records the lost Z on the control.
struct ControlledAngle {
  Angle angle;
  bool wrap = false;
};

ControlledAngle controlled_angle(double phi) {
  double r = std::fmod(phi, 2.0 * kTwoPi);
  if (r < 0.0) r += 2.0 * kTwoPi;
  return {Angle(r), r >= kTwoPi};
}

void push_rz(std::vector<Gate>& out, Qubit q, double phi) {
  Angle a(phi);
  if (!a.is_zero()) out.push_back(Gate::rz(q, a));
}

}  // namespace

Circuit logical_pseudo_circuit(const HashParams& hp, const std::vector<int>& symbol_signs) {
  validate(hp);
  const std::size_t target = hp.m - 1;
  std::vector<Gate> gates;
  for (std::size_t c = 0; c < hp.controls(); ++c) gates.push_back(Gate::h(c));
  gates.push_back(Gate::sx(target));
  std::vector<bool> parity(hp.controls(), false);
  for (int sign : symbol_signs) {
    push_rz(gates, target, sign * 2.0 * hp.xi[0]);
    for (std::size_t c = 0; c < hp.controls(); ++c) {
      const auto ca = controlled_angle(sign * 2.0 * hp.xi[c + 1]);
      gates.push_back(Gate::crz(c, target, ca.angle));
      parity[c] = parity[c] != ca.wrap;
    }
  }
  gates.push_back(Gate::sxdg(target));
  for (std::size_t c = 0; c < hp.controls(); ++c) {
    if (parity[c]) gates.push_back(Gate::rz(c, kPi));
    gates.push_back(Gate::h(c));
  }
  return Circuit(hp.m, std::move(gates), Space::Logical);
}

Circuit logical_pseudo_circuit(const HashParams& hp) {
  return logical_pseudo_circuit(hp, std::vector<int>(hp.l, 1));
}

std::size_t merged_boundaries(std::size_t l) {
  if (l <= 1) return 0;
  if (l == 2) return 1;
  return l - 2;
}

namespace {

bool merges_boundary(std::size_t l, std::size_t k) {
  if (l == 2) return k == 0;
  return l >= 3 && k >= 1 && k + 2 <= l;
}

struct Occupancy {
  std::vector<std::int64_t> at;  // physical -> logical, -1 if idle
  Layout where;                  // logical -> physical

  void swap(Qubit a, Qubit b) {
    std::swap(at[a], at[b]);
    if (at[a] >= 0) where[at[a]] = a;
    if (at[b] >= 0) where[at[b]] = b;
  }
};

Occupancy initial_occupancy(const HashParams& hp, const TopologySpec& spec) {
  const auto order = service_order(spec);
  Occupancy occ{std::vector<std::int64_t>(spec.size(), -1), Layout(hp.m)};
  occ.where[hp.m - 1] = order[0];
  for (std::size_t c = 0; c < hp.controls(); ++c) occ.where[c] = order[c + 1];
  for (std::size_t q = 0; q < hp.m; ++q) occ.at[occ.where[q]] = static_cast<std::int64_t>(q);
  return occ;
}

void check_routable(const HashParams& hp, const TopologySpec& spec) {
  validate(hp);
  if (hp.m != spec.size()) {
    throw HashError("width mismatch: m = " + std::to_string(hp.m) + " but the device has " +
                    std::to_string(spec.size()) + " qubits");
  }
  if (auto problems = validate_spec(spec); !problems.empty()) {
    throw HashError("invalid topology spec: " + problems.front());
  }
}

Circuit frame(const HashParams& hp, const Occupancy& start, const Occupancy& end,
              const std::vector<bool>& parity, const std::vector<Gate>& body,
              std::size_t width) {
  const std::size_t target = hp.m - 1;
  Circuit c(width, Space::Physical);
  for (std::size_t q = 0; q < hp.controls(); ++q) c.append(Gate::h(start.where[q]));
  c.append(Gate::sx(start.where[target]));
  c.append(body);
  c.append(Gate::sxdg(end.where[target]));
  for (std::size_t q = 0; q < hp.controls(); ++q) {
    if (parity[q]) c.append(Gate::rz(end.where[q], kPi));
    c.append(Gate::h(end.where[q]));
  }
  return c;
}

}  // namespace

RoutedHash routed_hash_circuit(const HashParams& hp, const TopologySpec& spec) {
  check_routable(hp, spec);
  const std::size_t target = hp.m - 1;
  Occupancy occ = initial_occupancy(hp, spec);
  const Occupancy start = occ;
  std::vector<ControlledAngle> angle(hp.controls());
  for (std::size_t c = 0; c < hp.controls(); ++c) angle[c] = controlled_angle(2.0 * hp.xi[c + 1]);
  std::vector<bool> parity(hp.controls(), false);

  const std::size_t len = spec.chain.size();
  std::vector<std::vector<Gate>> symbols(hp.l);
  for (std::size_t s = 0; s < hp.l; ++s) {
    const bool forward = s % 2 == 0;
    auto& ops = symbols[s];
    bool rz_done = false;
    auto place_rz = [&] {
      if (!rz_done) push_rz(ops, occ.where[target], 2.0 * hp.xi[0]);
      rz_done = true;
    };
    auto rotate = [&](Qubit control_phys) {
      const auto c = static_cast<std::size_t>(occ.at[control_phys]);
      ops.push_back(Gate::crz(control_phys, occ.where[target], angle[c].angle));
      parity[c] = parity[c] != angle[c].wrap;
    };
    for (std::size_t step = 0; step < len; ++step) {
      const std::size_t i = forward ? step : len - 1 - step;
      std::vector<Qubit> here;
      for (const auto& st : spec.stationary) {
        if (st.service_index == i) here.push_back(st.qubit);
      }
      if (!forward) std::reverse(here.begin(), here.end());
      for (Qubit q : here) {
        rotate(q);
        if (len == 1) place_rz();
      }
      if (step + 1 < len) {
        const Qubit next = spec.chain[forward ? i + 1 : i - 1];
        place_rz();
        rotate(next);
        ops.push_back(Gate::swap(next, occ.where[target]));
        occ.swap(next, occ.where[target]);
      }
    }
    place_rz();
  }

  for (std::size_t k = 0; k + 1 < hp.l; ++k) {
    if (!merges_boundary(hp.l, k)) continue;
    auto& prev = symbols[k];
    auto& next = symbols[k + 1];
    if (prev.empty() || next.empty()) continue;
    auto merged = try_merge_crz(prev.back(), next.front());
    if (!merged) continue;
    prev.back() = merged->merged;
    next.erase(next.begin());
    if (merged->wrapped) {
      const auto c = static_cast<std::size_t>(occ.at[merged->merged.wires[0]]);
      parity[c] = !parity[c];
    }
  }

  RoutedHash out;
  std::vector<Gate> body;
  for (std::size_t s = 0; s < hp.l; ++s) {
    auto lowered = lower_to_hardware(symbols[s]);
    out.cost.add("symbol " + std::to_string(s + 1),
                 static_cast<std::int64_t>(cnot_count(lowered)));
    body.insert(body.end(), lowered.begin(), lowered.end());
  }
  Circuit raw = frame(hp, start, occ, parity, body, spec.size());
  out.circuit = cancel_cx_pairs(raw);
  const auto removed = static_cast<std::int64_t>(cnot_count(raw)) -
                       static_cast<std::int64_t>(cnot_count(out.circuit));
  if (removed != 0) out.cost.add("cx pair cancellation", -removed);
  out.initial_layout = start.where;
  out.final_layout = occ.where;
  return out;
}

RoutedHash naive_routed_circuit(const HashParams& hp, const TopologySpec& spec) {
  check_routable(hp, spec);
  const std::size_t target = hp.m - 1;
  Occupancy occ = initial_occupancy(hp, spec);
  const Occupancy start = occ;
  std::vector<bool> parity(hp.controls(), false);
  RoutedHash out;
  std::vector<Gate> body;
  for (std::size_t s = 0; s < hp.l; ++s) {
    std::vector<Gate> ops;
    push_rz(ops, occ.where[target], 2.0 * hp.xi[0]);
    for (std::size_t c = 0; c < hp.controls(); ++c) {
      const auto ca = controlled_angle(2.0 * hp.xi[c + 1]);
      parity[c] = parity[c] != ca.wrap;
      const Qubit home = occ.where[target];
      auto path = spec.graph.shortest_path(home, occ.where[c]);
      // path = home .. control; walk the target up to path[len-2].
      std::vector<Gate> walk;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        walk.push_back(Gate::swap(path[k - 1], path[k]));
        occ.swap(path[k - 1], path[k]);
      }
      for (const Gate& g : walk) {
        auto sw = decompose_swap(g.wires[0], g.wires[1]);
        ops.insert(ops.end(), sw.begin(), sw.end());
      }
      auto rot = decompose_crz(occ.where[c], occ.where[target], ca.angle);
      ops.insert(ops.end(), rot.begin(), rot.end());
      for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
        auto sw = decompose_swap(it->wires[0], it->wires[1]);
        ops.insert(ops.end(), sw.begin(), sw.end());
        occ.swap(it->wires[0], it->wires[1]);
      }
    }
    out.cost.add("symbol " + std::to_string(s + 1), static_cast<std::int64_t>(cnot_count(ops)));
    body.insert(body.end(), ops.begin(), ops.end());
  }
  out.circuit = frame(hp, start, occ, parity, body, spec.size());
  out.initial_layout = start.where;
  out.final_layout = occ.where;
  return out;
}

std::int64_t cost_formula(const TopologySpec& spec, std::size_t l) {
  if (l < 1) throw HashError("cost formula needs l >= 1");
  const std::size_t len = spec.chain.size();
  bool first_end = false, last_end = false;
  for (const auto& st : spec.stationary) {
    first_end = first_end || st.service_index == 0;
    last_end = last_end || st.service_index + 1 == len;
  }
  const auto per_symbol =
      static_cast<std::int64_t>(2 * spec.stationary.size() + 3 * (len - 1));
  std::int64_t total = per_symbol * static_cast<std::int64_t>(l);
  for (std::size_t k = 0; k + 1 < l; ++k) {
    if (!merges_boundary(l, k)) continue;
    const bool after_forward = k % 2 == 0;
    if (after_forward ? last_end : first_end) total -= 2;
  }
  return total;
}

std::int64_t cost_formula(std::string_view device, std::size_t l) {
  if (l < 1) throw HashError("cost formula needs l >= 1");
  std::int64_t per = 0;
  if (device == "guadalupe16") {
    per = 37;
  } else if (device == "falcon27") {
    per = 67;
  } else {
    throw HashError("no closed-form cost for device '" + std::string(device) + "'");
  }
  const auto L = static_cast<std::int64_t>(l);
  if (l == 1) return per + 2;
  if (l == 2) return 2 * (per + 2) - 2;
  return per * L + 4;
}

double equality_test(const HashParams& hp, std::size_t l1, std::size_t l2) {
  validate(hp);
  if (hp.m > kDefaultMaxQubits) {
    return accept_prob(hp, static_cast<std::int64_t>(l1) - static_cast<std::int64_t>(l2));
  }
  std::vector<int> signs(l1, 1);
  signs.insert(signs.end(), l2, -1);
  return run(logical_pseudo_circuit(hp, signs)).probability(0);
}

}  // namespace qroute

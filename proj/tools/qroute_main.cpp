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

// qroute command-line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "qroute/hash.hpp"
#include "qroute/qasm.hpp"
#include "qroute/qft.hpp"
#include "qroute/simulator.hpp"
#include "qroute/topology.hpp"

namespace {

using namespace qroute;

constexpr int kUsage = 2;
constexpr int kVerifyFailed = 3;

// Custom graphs are files; everything else is a builtin name.
TopologySpec resolve_device(const std::string& device, std::size_t start) {
  if (std::filesystem::is_regular_file(device)) {
    auto spec = derive_chain(load_custom_file(device), start);
    // Keep the path as the name so a file never borrows a builtin's formula.
    spec.name = device;
    return spec;
  }
  return builtin(device);
}

std::uint64_t resolve_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("QROUTE_SEED"); env != nullptr && *env != '\0') {
    return std::stoull(env);
  }
  return flag;
}

bool is_device(std::string_view name) { return name == "guadalupe16" || name == "falcon27"; }

std::int64_t formula_for(const TopologySpec& spec, std::size_t l) {
  return is_device(spec.name) ? cost_formula(spec.name, l) : cost_formula(spec, l);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("error writing " + path);
}

std::string join_angles(const std::vector<double>& xi) {
  std::string s;
  for (std::size_t i = 0; i < xi.size(); ++i) s += fmt::format("{}{:.17g}", i ? "," : "", xi[i]);
  return s;
}

int hash_cost(const std::string& device, std::size_t l, bool naive, std::uint64_t p,
              std::size_t start) {
  const auto spec = resolve_device(device, start);
  HashParams hp{p, spec.size(), default_angles(p, spec.size()), l};
  auto routed = routed_hash_circuit(hp, spec);
  const auto formula = formula_for(spec, l);
  fmt::print("device: {}\nl: {}\n", spec.name, l);
  for (const auto& [label, v] : routed.cost.breakdown) fmt::print("{}: {}\n", label, v);
  fmt::print("total: {}\nformula: {}\n", routed.cost.total_cnots, formula);
  if (naive) {
    auto base = naive_routed_circuit(hp, spec);
    routed.cost.set_baseline(base.cost.total_cnots);
    fmt::print("naive: {}\nratio: {:.4f}\n", *routed.cost.baseline_cnots, *routed.cost.ratio);
  }
  const bool match = routed.cost.total_cnots == formula &&
                     static_cast<std::int64_t>(cnot_count(routed.circuit)) == formula;
  fmt::print("status: {}\n", match ? "MATCH" : "MISMATCH");
  return match ? 0 : kVerifyFailed;
}

int hash_sim(std::uint64_t p, std::size_t m, std::size_t l, std::uint64_t seed, std::size_t budget) {
  if (m > kDefaultMaxQubits) throw HashError("hash-sim simulates at most 20 qubits");
  const auto found = search_angles(p, m, budget, seed);
  fmt::print("p: {}\nm: {}\nseed: {}\nbudget: {}\n", p, m, seed, budget);
  fmt::print("xi: {}\neps: {:.12f}\n", join_angles(found.xi), found.eps);
  const auto spec = lnn(m);
  bool ok = true;
  for (std::size_t len : {l, static_cast<std::size_t>(p)}) {
    HashParams hp{p, m, found.xi, len};
    const double closed = accept_prob(hp);
    const double simulated = run(routed_hash_circuit(hp, spec).circuit).probability(0);
    const double diff = std::abs(closed - simulated);
    ok = ok && diff < 1e-9;
    fmt::print("l={} accept closed={:.12f} simulated={:.12f} diff={:.3e}\n", len, closed, simulated,
               diff);
  }
  return ok ? 0 : kVerifyFailed;
}

int qft(const std::string& device, std::size_t n, const std::string& schedule_file, bool greedy,
        bool verify, const std::string& diagnostics, std::size_t start) {
  QftSchedule s;
  if (!schedule_file.empty()) {
    std::ifstream f(schedule_file);
    if (!f) throw std::runtime_error("cannot open " + schedule_file);
    std::stringstream ss;
    ss << f.rdbuf();
    s = parse_schedule(ss.str());
  } else {
    const auto spec = resolve_device(device, start);
    if (is_device(spec.name) && !greedy && n == 0) {
      s = builtin_schedule(spec.name);
    } else {
      s = greedy_schedule(n == 0 ? spec.size() : n, spec);
    }
  }
  if (!diagnostics.empty()) write_file(diagnostics, schedule_diagnostics_text(s, s.device.name));
  for (const auto& d : validate_schedule(s)) {
    fmt::print("flagged row={} position={}: {}\n", d.row, d.position, d.message);
  }
  const auto ex = execute_schedule(s);
  fmt::print("device: {}\nn: {}\n", s.device.name, s.n);
  for (const auto& [label, v] : ex.cost.breakdown) fmt::print("{}: {}\n", label, v);
  fmt::print("total: {}\n", ex.cost.total_cnots);
  if (!verify) return 0;
  const auto rep = verify_structural(ex.trace, ex.initial_layout, s.n);
  for (const auto& line : rep.diff) fmt::print("  {}\n", line);
  fmt::print("structural: {}\n", rep.ok ? "PASS" : "FAIL");
  bool ok = rep.ok;
  if (s.n <= kUnitaryMaxQubits) {
    const bool uni = verify_unitary(ex, s.n);
    fmt::print("unitary: {}\n", uni ? "PASS" : "FAIL");
    ok = ok && uni;
  } else {
    fmt::print("unitary: skipped (n > {})\n", kUnitaryMaxQubits);
  }
  return ok ? 0 : kVerifyFailed;
}

int sweep(const std::string& device, std::size_t l_max, const std::string& out, std::uint64_t p,
          std::size_t start) {
  const auto spec = resolve_device(device, start);
  std::string csv = "l,optimized,naive,formula\n";
  for (std::size_t l = 1; l <= l_max; ++l) {
    HashParams hp{p, spec.size(), default_angles(p, spec.size()), l};
    csv += fmt::format("{},{},{},{}\n", l, cnot_count(routed_hash_circuit(hp, spec).circuit),
                       cnot_count(naive_routed_circuit(hp, spec).circuit), formula_for(spec, l));
  }
  write_file(out, csv);
  fmt::print("wrote {} rows to {}\n", l_max, out);
  return 0;
}

int export_circuit(const std::string& kind, const std::string& device, const std::string& out,
                   std::size_t l, bool logical, std::uint64_t p, std::size_t start) {
  const auto spec = resolve_device(device, start);
  Circuit c;
  bool logical_circuit = false;
  if (kind == "hash") {
    c = routed_hash_circuit({p, spec.size(), default_angles(p, spec.size()), l}, spec).circuit;
  } else if (kind == "hash-logical") {
    c = logical_pseudo_circuit({p, spec.size(), default_angles(p, spec.size()), l});
    logical_circuit = true;
  } else if (kind == "qft") {
    c = execute_schedule(is_device(spec.name) ? builtin_schedule(spec.name)
                                              : greedy_schedule(spec.size(), spec))
            .circuit;
  } else if (kind == "qft-reference") {
    c = reference_qft(spec.size());
    logical_circuit = true;
  } else {
    throw std::invalid_argument("unknown circuit kind '" + kind + "'");
  }
  if (logical_circuit && !logical) {
    throw QasmError("'" + kind + "' is a logical circuit; pass --logical to export it");
  }
  write_file(out, to_qasm(c, logical));
  fmt::print("wrote {} gates ({} cx) to {}\n", c.size(), cnot_count(c), out);
  return 0;
}

int topology_validate(const std::string& device, std::size_t start) {
  const auto spec = resolve_device(device, start);
  fmt::print("device: {}\nqubits: {}\nedges: {}\nstart: {}\nchain:", spec.name, spec.size(),
             spec.graph.edges().size(), spec.start);
  for (Qubit q : spec.chain) fmt::print(" {}", q);
  fmt::print("\nstationary:");
  for (const auto& st : spec.stationary) fmt::print(" {}@{}", st.qubit, spec.chain[st.service_index]);
  fmt::print("\n");
  const auto problems = validate_spec(spec);
  for (const auto& pr : problems) fmt::print("problem: {}\n", pr);
  fmt::print("status: {}\n", problems.empty() ? "VALID" : "INVALID");
  return problems.empty() ? 0 : kVerifyFailed;
}

int angles_search(std::uint64_t p, std::size_t m, std::size_t budget, std::uint64_t seed) {
  const auto found = search_angles(p, m, budget, seed);
  fmt::print("p: {}\nm: {}\nseed: {}\nbudget: {}\nxi: {}\neps: {:.12f}\n", p, m, seed, budget,
             join_angles(found.xi), found.eps);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology-aware routing for quantum hashing and QFT circuits"};
  app.require_subcommand(1);

  std::string device, out, schedule_file, diagnostics, kind;
  std::size_t l = 1, l_max = 10, n = 0, m = 3, budget = 10000, start = 0;
  std::uint64_t p = 31, seed = kDefaultSeed;
  bool naive = false, verify = false, greedy = false, logical = false;

  auto* cost_cmd = app.add_subcommand("hash-cost", "CNOT cost of the routed hashing circuit");
  cost_cmd->add_option("device", device, "guadalupe16, falcon27, lnnK or an edge-list file")->required();
  cost_cmd->add_option("l", l, "input length")->required()->check(CLI::PositiveNumber);
  cost_cmd->add_flag("--naive", naive, "also build the naive baseline");
  cost_cmd->add_option("--p", p, "prime for the default angles");
  cost_cmd->add_option("--start", start, "chain start for custom graphs");

  auto* sim_cmd = app.add_subcommand("hash-sim", "search angles and simulate on an LNN chain");
  sim_cmd->add_option("--p", p)->required();
  sim_cmd->add_option("--m", m)->required();
  sim_cmd->add_option("--l", l)->required();
  sim_cmd->add_option("--seed", seed);
  sim_cmd->add_option("--budget", budget);

  auto* qft_cmd = app.add_subcommand("qft", "execute a QFT repositioning schedule");
  qft_cmd->add_option("device", device);
  qft_cmd->add_option("--n", n, "logical qubits (greedy schedule)");
  qft_cmd->add_option("--schedule", schedule_file, "schedule file");
  qft_cmd->add_flag("--greedy", greedy, "use the greedy schedule on builtin devices");
  qft_cmd->add_flag("--verify", verify, "structural and unitary verification");
  qft_cmd->add_option("--diagnostics", diagnostics, "write adjacency diagnostics here");
  qft_cmd->add_option("--start", start);

  auto* sweep_cmd = app.add_subcommand("sweep", "optimized vs naive cost for l = 1..l_max");
  sweep_cmd->add_option("device", device)->required();
  sweep_cmd->add_option("l_max", l_max)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("out", out)->required();
  sweep_cmd->add_option("--p", p);
  sweep_cmd->add_option("--start", start);

  auto* export_cmd = app.add_subcommand("export", "write a circuit as OpenQASM 2");
  export_cmd->add_option("kind", kind, "hash, hash-logical, qft or qft-reference")->required();
  export_cmd->add_option("device", device)->required();
  export_cmd->add_option("out", out)->required();
  export_cmd->add_option("--l", l);
  export_cmd->add_flag("--logical", logical, "allow crz/cp/swap/ry lines");
  export_cmd->add_option("--p", p);
  export_cmd->add_option("--start", start);

  auto* topo_cmd = app.add_subcommand("topology-validate", "check a topology spec");
  topo_cmd->add_option("device", device)->required();
  topo_cmd->add_option("--start", start);

  auto* search_cmd = app.add_subcommand("angles-search", "seeded search for hashing angles");
  search_cmd->add_option("--p", p)->required();
  search_cmd->add_option("--m", m)->required();
  search_cmd->add_option("--budget", budget);
  search_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*cost_cmd) return hash_cost(device, l, naive, p, start);
    if (*sim_cmd) return hash_sim(p, m, l, resolve_seed(seed), budget);
    if (*qft_cmd) {
      if (device.empty() && schedule_file.empty()) throw std::invalid_argument("qft needs a device or --schedule");
      return qft(device, n, schedule_file, greedy, verify, diagnostics, start);
    }
    if (*sweep_cmd) return sweep(device, l_max, out, p, start);
    if (*export_cmd) return export_circuit(kind, device, out, l, logical, p, start);
    if (*topo_cmd) return topology_validate(device, start);
    if (*search_cmd) return angles_search(p, m, budget, resolve_seed(seed));
  } catch (const ScheduleError& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return kVerifyFailed;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}

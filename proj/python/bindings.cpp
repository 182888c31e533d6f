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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qroute/hash.hpp"
#include "qroute/qasm.hpp"
#include "qroute/qft.hpp"
#include "qroute/simulator.hpp"
#include "qroute/topology.hpp"

namespace py = pybind11;
using namespace qroute;

namespace {

py::dict cost_dict(const CostReport& c) {
  py::dict d;
  d["total"] = c.total_cnots;
  d["breakdown"] = c.breakdown;
  return d;
}

HashParams params(std::uint64_t p, const std::vector<double>& xi, std::size_t l) {
  return HashParams{p, xi.size(), xi, l};
}

}  // namespace

PYBIND11_MODULE(_qroute, m) {
  m.doc() = "Topology-aware CNOT routing for hashing and QFT circuits";

  py::register_exception<HashError>(m, "HashError", PyExc_ValueError);
  py::register_exception<ScheduleError>(m, "ScheduleError", PyExc_RuntimeError);
  py::register_exception<TopologyError>(m, "TopologyError", PyExc_ValueError);
  py::register_exception<QasmError>(m, "QasmError", PyExc_ValueError);

  m.def("devices", [] { return std::vector<std::string>{"guadalupe16", "falcon27"}; });

  m.def(
      "hash_cost",
      [](const std::string& device, std::size_t l, std::uint64_t p) {
        const auto spec = builtin(device);
        const auto r = routed_hash_circuit({p, spec.size(), default_angles(p, spec.size()), l}, spec);
        return cost_dict(r.cost);
      },
      py::arg("device"), py::arg("l"), py::arg("p") = 31);
  m.def(
      "naive_cost",
      [](const std::string& device, std::size_t l, std::uint64_t p) {
        const auto spec = builtin(device);
        const auto r = naive_routed_circuit({p, spec.size(), default_angles(p, spec.size()), l}, spec);
        return static_cast<std::int64_t>(cnot_count(r.circuit));
      },
      py::arg("device"), py::arg("l"), py::arg("p") = 31);
  m.def("cost_formula", py::overload_cast<std::string_view, std::size_t>(&cost_formula),
        py::arg("device"), py::arg("l"));

  m.def(
      "accept_prob",
      [](std::uint64_t p, const std::vector<double>& xi, std::int64_t l) {
        return accept_prob(params(p, xi, 0), l);
      },
      py::arg("p"), py::arg("xi"), py::arg("l"));
  m.def(
      "simulated_accept",
      [](std::uint64_t p, const std::vector<double>& xi, std::size_t l) {
        return run(logical_pseudo_circuit(params(p, xi, l))).probability(0);
      },
      py::arg("p"), py::arg("xi"), py::arg("l"));
  m.def(
      "search_angles",
      [](std::uint64_t p, std::size_t m, std::size_t budget, std::uint64_t seed) {
        const auto r = search_angles(p, m, budget, seed);
        return py::make_tuple(r.xi, r.eps);
      },
      py::arg("p"), py::arg("m"), py::arg("budget"), py::arg("seed") = kDefaultSeed);

  m.def(
      "qft_cost",
      [](const std::string& device, std::size_t n) {
        const auto s = n == 0 ? builtin_schedule(device) : greedy_schedule(n, builtin(device));
        return cost_dict(execute_schedule(s).cost);
      },
      py::arg("device"), py::arg("n") = 0,
      "Executes the built-in table (n = 0) or a greedy schedule for n qubits.");

  m.def(
      "export_hash_qasm",
      [](const std::string& device, std::size_t l, std::uint64_t p) {
        const auto spec = builtin(device);
        return to_qasm(routed_hash_circuit({p, spec.size(), default_angles(p, spec.size()), l}, spec).circuit);
      },
      py::arg("device"), py::arg("l"), py::arg("p") = 31);
}

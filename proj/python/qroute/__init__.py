"""Python access to the qroute routing core."""

from ._qroute import (  # noqa: F401
    HashError,
    QasmError,
    ScheduleError,
    TopologyError,
    accept_prob,
    cost_formula,
    devices,
    export_hash_qasm,
    hash_cost,
    naive_cost,
    qft_cost,
    search_angles,
    simulated_accept,
)

__all__ = [
    "HashError",
    "QasmError",
    "ScheduleError",
    "TopologyError",
    "accept_prob",
    "cost_formula",
    "devices",
    "export_hash_qasm",
    "hash_cost",
    "naive_cost",
    "qft_cost",
    "search_angles",
    "simulated_accept",
]

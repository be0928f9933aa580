"""compiler package init"""

from compiler.circuit_io import dump_circuit, load_circuit
from compiler.marginal_builder import build_qmarginal, query_cost
from compiler.models import (
    QuantumCircuit,
    QuantumGate,
    ReversibleCircuit,
    ReversibleGate,
    inverse,
)
from compiler.reversibilizer import (
    classical_simulate,
    classical_simulate_many,
    compile,
    stats,
)

__all__ = [
    "QuantumCircuit",
    "QuantumGate",
    "ReversibleCircuit",
    "ReversibleGate",
    "build_qmarginal",
    "classical_simulate",
    "classical_simulate_many",
    "compile",
    "dump_circuit",
    "inverse",
    "load_circuit",
    "query_cost",
    "stats",
]

"""U' = U (H^m x I): one Hadamard layer on the input register, then U."""

from __future__ import annotations

import logging
from typing import Dict

from compiler.models import QuantumCircuit, QuantumGate, ReversibleCircuit

logger = logging.getLogger(__name__)


def build_qmarginal(u: ReversibleCircuit) -> QuantumCircuit:
    """Prepend H on qubits 0..m-1 to U's gates, which are kept verbatim."""
    layer = [QuantumGate(kind="H", target=q) for q in range(u.m)]
    body = [
        QuantumGate(kind=g.kind, target=g.target, controls=g.controls) for g in u.gates
    ]
    circuit = QuantumCircuit(m=u.m, n=u.n, k=u.k, gates=tuple(layer + body))
    logger.debug("Built Q-marginal circuit: %s H + %s U gates", u.m, len(body))
    return circuit


def query_cost(circuit: QuantumCircuit) -> Dict[str, int]:
    """Hadamard count and U gate count of a circuit from build_qmarginal.

    Raises ValueError when the circuit does not start with exactly one H per
    input qubit (in order) or carries an H anywhere else.
    """
    head = circuit.gates[: circuit.m]
    expected = [("H", q) for q in range(circuit.m)]
    if [(g.kind, g.target) for g in head] != expected:
        raise ValueError("circuit does not start with the input Hadamard layer")
    body = circuit.gates[circuit.m :]
    if any(g.kind == "H" for g in body):
        raise ValueError("circuit has Hadamards outside the input layer")
    return {"hadamards": len(head), "u_gate_count": len(body)}

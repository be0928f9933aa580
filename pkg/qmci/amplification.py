"""Grover iterate Q = -A S0 A^dagger S_chi over a Q-marginal circuit A.

S_chi flips the sign of basis states whose output register lies in S; S0
flips the sign of |0...0>. Both reflections act directly on the amplitudes.
After k iterates the marked probability is sin^2((2k+1) theta) with
sin(theta) = sqrt(a), at a cost of 2k+1 applications of A.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, Optional

import numpy as np

from compiler.marginal_builder import query_cost
from compiler.models import QuantumCircuit, inverse
from qmci.predicates import OutcomePredicate
from simulator.statevector import Statevector, init_zero, marked_mask, run

logger = logging.getLogger(__name__)


def grover_queries(k: int) -> int:
    return 2 * k + 1


def grover_power_probabilities(
    circuit: QuantumCircuit,
    pred: OutcomePredicate,
    ks: Iterable[int],
    max_qubits: Optional[int] = None,
) -> Dict[int, float]:
    """Marked probability after k iterates, for every k in `ks`.

    The iterate is applied once per step up to max(ks), so one call serves a
    whole schedule.
    """
    ks = list(ks)
    if not ks or min(ks) < 0:
        raise ValueError("powers must be nonnegative and nonempty")
    query_cost(circuit)
    pred.check_outputs(circuit.n)

    w = circuit.width
    mask = marked_mask(w, *circuit.output_register, pred.contains)
    undo = inverse(circuit)
    amps = run(circuit, init_zero(w, max_qubits=max_qubits)).amplitudes

    wanted = set(ks)
    found: Dict[int, float] = {}
    for step in range(max(ks) + 1):
        if step in wanted:
            found[step] = float(np.sum(np.abs(amps[mask]) ** 2))
        if step == max(ks):
            break
        amps[mask] *= -1
        amps = run(undo, Statevector(w, amps)).amplitudes
        amps[0] *= -1
        amps = run(circuit, Statevector(w, amps)).amplitudes
        amps *= -1
    logger.debug("Amplified up to k=%s on %s qubits", max(ks), w)
    return {k: found[k] for k in ks}


def grover_power_probability(
    circuit: QuantumCircuit,
    pred: OutcomePredicate,
    k: int,
    max_qubits: Optional[int] = None,
) -> float:
    return grover_power_probabilities(circuit, pred, [k], max_qubits=max_qubits)[k]

"""Bennett compute-copy-uncompute compilation of a GateNetwork.

Gate j of the network gets its own ancilla qubit m+n+j, so k equals the
network's gate count. Per classical gate (into a fresh, zeroed ancilla t):

    NOT a    -> CNOT a t ; X t
    XOR a b  -> CNOT a t ; CNOT b t
    AND a b  -> CCNOT a b t
    OR a b   -> CNOT a t ; CNOT b t ; CCNOT a b t     (a xor b xor ab)
    CONST0   -> nothing
    CONST1   -> X t

AND/OR with both sources on the same wire reduce to a single CNOT.
The copy phase CNOTs each output wire into its output qubit; the uncompute
phase replays the compute phase backwards.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Union

import numpy as np

from compiler.models import ReversibleCircuit, ReversibleGate
from sampler_ir.models import GateNetwork, NetworkGate

logger = logging.getLogger(__name__)


def _x(t: int) -> ReversibleGate:
    return ReversibleGate(kind="X", target=t)


def _cnot(c: int, t: int) -> ReversibleGate:
    return ReversibleGate(kind="CNOT", target=t, controls=(c,))


def _ccnot(c1: int, c2: int, t: int) -> ReversibleGate:
    return ReversibleGate(kind="CCNOT", target=t, controls=(c1, c2))


def _compute_gate(gate: NetworkGate, srcs: List[int], t: int) -> List[ReversibleGate]:
    if gate.op == "NOT":
        return [_cnot(srcs[0], t), _x(t)]
    if gate.op == "XOR":
        return [_cnot(srcs[0], t), _cnot(srcs[1], t)]
    if gate.op in ("AND", "OR") and srcs[0] == srcs[1]:
        return [_cnot(srcs[0], t)]
    if gate.op == "AND":
        return [_ccnot(srcs[0], srcs[1], t)]
    if gate.op == "OR":
        return [_cnot(srcs[0], t), _cnot(srcs[1], t), _ccnot(srcs[0], srcs[1], t)]
    if gate.op == "CONST1":
        return [_x(t)]
    return []


def compile(network: GateNetwork) -> ReversibleCircuit:
    """Compile f into U with |x>|y>|0^k> -> |x>|y xor f(x)>|0^k>."""
    m, n = network.num_inputs, network.num_outputs
    k = len(network.gates)

    def qubit(wire: int) -> int:
        # inputs keep their index; gate j lives on ancilla m+n+j
        return wire if wire < m else m + n + (wire - m)

    compute: List[ReversibleGate] = []
    for gate in network.gates:
        srcs = [qubit(s) for s in gate.sources]
        compute.extend(_compute_gate(gate, srcs, qubit(gate.wire_id)))
    copy = [_cnot(qubit(wire), m + out) for out, wire in enumerate(network.output_map)]
    gates = compute + copy + compute[::-1]

    circuit = ReversibleCircuit(m=m, n=n, k=k, gates=tuple(gates))
    logger.debug(
        "Compiled network m=%s n=%s: %s compute, %s copy gates, k=%s",
        m,
        n,
        len(compute),
        len(copy),
        k,
    )
    return circuit


def classical_simulate(circuit: ReversibleCircuit, bits: Sequence[int]) -> List[int]:
    """Run the permutation circuit on one basis state (index q = qubit q)."""
    if len(bits) != circuit.width:
        raise ValueError(
            f"state has {len(bits)} bits, circuit width is {circuit.width}"
        )
    state = [int(b) & 1 for b in bits]
    for gate in circuit.gates:
        if all(state[c] for c in gate.controls):
            state[gate.target] ^= 1
    return state


def classical_simulate_many(
    circuit: ReversibleCircuit, states: Union[np.ndarray, Sequence[Sequence[int]]]
) -> np.ndarray:
    """Batch form of classical_simulate; rows are basis states."""
    out = np.array(states, dtype=bool, copy=True)
    if out.ndim != 2 or out.shape[1] != circuit.width:
        raise ValueError(
            f"expected shape (batch, {circuit.width}), got {np.shape(states)}"
        )
    for gate in circuit.gates:
        if gate.kind == "X":
            out[:, gate.target] ^= True
        elif gate.kind == "CNOT":
            out[:, gate.target] ^= out[:, gate.controls[0]]
        else:
            c1, c2 = gate.controls
            out[:, gate.target] ^= out[:, c1] & out[:, c2]
    return out


def stats(circuit: ReversibleCircuit) -> Dict[str, object]:
    """Resource tallies: width, gate count, ancilla count, per-kind counts."""
    return {
        "width": circuit.width,
        "gate_count": len(circuit.gates),
        "ancilla_count": circuit.k,
        "counts": circuit.kind_counts(),
    }

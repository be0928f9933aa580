"""Serialized circuit format.

    qubits <m> <n> <k>
    H <t>
    X <t>
    CNOT <c> <t>
    CCNOT <c1> <c2> <t>

A text with at least one H line loads as a QuantumCircuit, otherwise as a
ReversibleCircuit. '#' comments and blank lines are ignored.
"""

from __future__ import annotations

from typing import List, Union

from pydantic import ValidationError

from compiler.models import QuantumCircuit, ReversibleCircuit
from helpers.errors import CircuitFormatError

Circuit = Union[ReversibleCircuit, QuantumCircuit]

_ARGS = {"H": 1, "X": 1, "CNOT": 2, "CCNOT": 3}


def dump_circuit(circuit: Circuit) -> str:
    lines = [f"qubits {circuit.m} {circuit.n} {circuit.k}"]
    for gate in circuit.gates:
        lines.append(" ".join([gate.kind, *map(str, gate.qubits)]))
    return "\n".join(lines) + "\n"


def load_circuit(text: str) -> Circuit:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            rows.append((lineno, content.split()))
    if not rows or rows[0][1][0] != "qubits" or len(rows[0][1]) != 4:
        raise CircuitFormatError("missing 'qubits <m> <n> <k>' header")
    try:
        m, n, k = (int(v) for v in rows[0][1][1:])
    except ValueError:
        raise CircuitFormatError("register sizes must be integers") from None

    gates: List[dict] = []
    for lineno, tokens in rows[1:]:
        kind, args = tokens[0], tokens[1:]
        if kind not in _ARGS or len(args) != _ARGS[kind]:
            shown = " ".join(tokens)
            raise CircuitFormatError(f"line {lineno}: malformed gate '{shown}'")
        try:
            qubits = [int(a) for a in args]
        except ValueError:
            raise CircuitFormatError(
                f"line {lineno}: qubit indices must be integers"
            ) from None
        gates.append(
            {"kind": kind, "target": qubits[-1], "controls": tuple(qubits[:-1])}
        )

    has_h = any(g["kind"] == "H" for g in gates)
    model = QuantumCircuit if has_h else ReversibleCircuit
    try:
        return model(m=m, n=n, k=k, gates=tuple(gates))
    except ValidationError as e:
        raise CircuitFormatError(str(e)) from e

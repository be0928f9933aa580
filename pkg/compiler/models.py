"""Reversible and quantum circuit records.

Qubit layout shared by both circuit types:
- 0 .. m-1          input register (x / j)
- m .. m+n-1        output register (y)
- m+n .. m+n+k-1    ancillas
"""

from __future__ import annotations

from typing import Dict, Literal, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

_NUM_CONTROLS = {"H": 0, "X": 0, "CNOT": 1, "CCNOT": 2}


class _Gate(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    target: int = Field(..., ge=0)
    controls: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_shape(self) -> "_Gate":
        if len(self.controls) != _NUM_CONTROLS[self.kind]:
            raise ValueError(
                f"{self.kind} takes {_NUM_CONTROLS[self.kind]} controls, "
                f"got {len(self.controls)}"
            )
        qubits = (*self.controls, self.target)
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"{self.kind} qubits must be distinct: {qubits}")
        if any(c < 0 for c in self.controls):
            raise ValueError("qubit indices must be nonnegative")
        return self

    @property
    def qubits(self) -> Tuple[int, ...]:
        return (*self.controls, self.target)


class ReversibleGate(_Gate):
    kind: Literal["X", "CNOT", "CCNOT"]


class QuantumGate(_Gate):
    kind: Literal["H", "X", "CNOT", "CCNOT"]


class _RegisterLayout(BaseModel):
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    k: int = Field(0, ge=0)

    @property
    def width(self) -> int:
        return self.m + self.n + self.k

    @property
    def output_register(self) -> Tuple[int, int]:
        return self.m, self.m + self.n

    @property
    def ancilla_register(self) -> Tuple[int, int]:
        return self.m + self.n, self.width

    def _check_bounds(self, gates) -> None:
        for pos, gate in enumerate(gates):
            if max(gate.qubits) >= self.width:
                raise ValueError(
                    f"gate {pos} ({gate.kind}) addresses qubit {max(gate.qubits)} "
                    f"outside width {self.width}"
                )

    def kind_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for gate in self.gates:  # type: ignore[attr-defined]
            counts[gate.kind] = counts.get(gate.kind, 0) + 1
        return counts


class ReversibleCircuit(_RegisterLayout):
    """The reversible form U: |x>|y>|0^k> -> |x>|y xor f(x)>|0^k>."""

    gates: Tuple[ReversibleGate, ...] = ()

    @model_validator(mode="after")
    def _check_gates(self) -> "ReversibleCircuit":
        self._check_bounds(self.gates)
        for pos, gate in enumerate(self.gates):
            if gate.target < self.m:
                raise ValueError(f"gate {pos} targets input qubit {gate.target}")
        return self


class QuantumCircuit(_RegisterLayout):
    """A gate list over {H, X, CNOT, CCNOT} with the same register layout."""

    gates: Tuple[QuantumGate, ...] = ()

    @model_validator(mode="after")
    def _check_gates(self) -> "QuantumCircuit":
        self._check_bounds(self.gates)
        return self


def inverse(circuit):
    """Every gate in the alphabet is self-inverse, so reverse the list."""
    return circuit.model_copy(update={"gates": tuple(reversed(circuit.gates))})

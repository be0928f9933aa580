"""Dense statevector simulation.

Index convention: bit q of a basis index is qubit q (little-endian). The
amplitude array is reshaped to (2,)*w for gate application, where qubit q is
axis w-1-q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from compiler.models import QuantumCircuit, QuantumGate
from helpers.errors import ResourceLimitError
from helpers.settings import get_settings

logger = logging.getLogger(__name__)

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class Statevector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (2**self.num_qubits,):
            raise ValueError(
                f"expected {2**self.num_qubits} amplitudes, "
                f"got shape {self.amplitudes.shape}"
            )

    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)


@dataclass(frozen=True)
class MeasuredDistribution:
    probabilities: np.ndarray

    def __post_init__(self):
        if np.any(self.probabilities < 0) or abs(self.probabilities.sum() - 1.0) > 1e-9:
            raise ValueError("probabilities must be nonnegative and sum to 1")

    @property
    def num_outcomes(self) -> int:
        return len(self.probabilities)


def init_zero(num_qubits: int, max_qubits: Optional[int] = None) -> Statevector:
    """|0^w>. Raises ResourceLimitError above the qubit cap."""
    cap = get_settings().max_qubits if max_qubits is None else max_qubits
    if num_qubits > cap:
        raise ResourceLimitError("qubit count", num_qubits, cap)
    if num_qubits < 1:
        raise ValueError("need at least one qubit")
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(num_qubits, amps)


def _slices(gate: QuantumGate, w: int) -> Tuple[tuple, tuple]:
    idx: List[object] = [slice(None)] * w
    for c in gate.controls:
        idx[w - 1 - c] = 1
    axis = w - 1 - gate.target
    idx[axis] = 0
    idx0 = tuple(idx)
    idx[axis] = 1
    return idx0, tuple(idx)


def _apply_inplace(amps: np.ndarray, gate: QuantumGate, w: int) -> None:
    view = amps.reshape((2,) * w)
    idx0, idx1 = _slices(gate, w)
    a0 = view[idx0].copy()
    if gate.kind == "H":
        a1 = view[idx1]
        view[idx0] = (a0 + a1) * _INV_SQRT2
        view[idx1] = (a0 - a1) * _INV_SQRT2
    else:
        view[idx0] = view[idx1]
        view[idx1] = a0


def _check_gate(gate: QuantumGate, w: int) -> None:
    if max(gate.qubits) >= w:
        raise ValueError(f"{gate.kind} on qubit {max(gate.qubits)} exceeds width {w}")


def apply_gate(state: Statevector, gate: QuantumGate) -> Statevector:
    """Return a new state with the gate applied."""
    _check_gate(gate, state.num_qubits)
    amps = state.amplitudes.copy()
    _apply_inplace(amps, gate, state.num_qubits)
    return Statevector(state.num_qubits, amps)


def run(circuit: QuantumCircuit, state: Statevector) -> Statevector:
    """Apply the circuit's gates in order to a copy of `state`."""
    if circuit.width != state.num_qubits:
        raise ValueError(
            f"circuit width {circuit.width} does not match state width "
            f"{state.num_qubits}"
        )
    amps = state.amplitudes.copy()
    for gate in circuit.gates:
        _apply_inplace(amps, gate, state.num_qubits)
    return Statevector(state.num_qubits, amps)


def _check_register(state: Statevector, start: int, stop: int) -> None:
    if not 0 <= start < stop <= state.num_qubits:
        raise ValueError(
            f"register [{start}, {stop}) outside width {state.num_qubits}"
        )


def marginal_distribution(
    state: Statevector, start: int, stop: int
) -> MeasuredDistribution:
    """Distribution of qubits start..stop-1; outcome v has bit i = qubit start+i."""
    _check_register(state, start, stop)
    probs = np.abs(state.amplitudes) ** 2
    hi = 2 ** (state.num_qubits - stop)
    probs = probs.reshape(hi, 2 ** (stop - start), 2**start).sum(axis=(0, 2))
    return MeasuredDistribution(probs)


def nonzero_amplitudes(state: Statevector, tol: float) -> List[Tuple[int, complex]]:
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    idx = np.flatnonzero(np.abs(state.amplitudes) > tol)
    return [(int(i), complex(state.amplitudes[i])) for i in idx]


def dump_state(state: Statevector, tol: float = 1e-12) -> str:
    """'index re im' per nonzero amplitude."""
    return "\n".join(
        f"{i} {a.real!r} {a.imag!r}" for i, a in nonzero_amplitudes(state, tol)
    )


def register_values(num_qubits: int, start: int, stop: int) -> np.ndarray:
    """Value of qubits start..stop-1 for every basis index."""
    indices = np.arange(2**num_qubits, dtype=np.int64)
    return (indices >> start) & (2 ** (stop - start) - 1)


def marked_mask(
    num_qubits: int,
    start: int,
    stop: int,
    predicate: Callable[[np.ndarray], np.ndarray],
) -> np.ndarray:
    """Boolean mask of basis indices whose register value satisfies `predicate`."""
    return np.asarray(predicate(register_values(num_qubits, start, stop)), dtype=bool)


def sample_register(
    state: Statevector,
    start: int,
    stop: int,
    shots: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Counts per register value from `shots` computational-basis measurements."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    probs = marginal_distribution(state, start, stop).probabilities
    return rng.multinomial(shots, probs / probs.sum())
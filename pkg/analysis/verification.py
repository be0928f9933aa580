"""End-to-end check that U' prepares a Q-marginal of f's distribution.

Pipeline: compile -> build_qmarginal -> run on |0> -> output-register
marginal, compared with the brute-force counts. The amplitude check expects
exactly 2^m nonzero entries of magnitude 2^(-m/2), each with clean ancillas
and output bits equal to f of its input bits.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, computed_field

from compiler.marginal_builder import build_qmarginal
from compiler.reversibilizer import compile as compile_network
from helpers.settings import get_settings
from sampler_ir.models import ExactDistribution, GateNetwork
from sampler_ir.network import brute_force_distribution, evaluate_many
from simulator.statevector import (
    MeasuredDistribution,
    Statevector,
    init_zero,
    marginal_distribution,
    nonzero_amplitudes,
    run,
)

logger = logging.getLogger(__name__)


class DistributionDistance(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_abs: float
    total_variation: float


class OutcomeRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: int
    exact: float
    measured: float


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_inputs: int
    num_outputs: int
    num_ancillas: int
    tolerance: float
    max_abs_probability_error: float
    total_variation: float
    amplitude_uniformity_error: float
    ancilla_clean: bool
    outputs_consistent: bool
    nonzero_count: int
    max_imaginary: float
    grouping_error: float
    outcomes: Tuple[OutcomeRow, ...]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return (
            self.max_abs_probability_error <= self.tolerance
            and self.amplitude_uniformity_error <= self.tolerance
            and self.ancilla_clean
        )

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def render_text(self) -> str:
        lines = [
            f"Q-marginal verification: {'PASSED' if self.passed else 'FAILED'}",
            f"  registers: m={self.num_inputs} n={self.num_outputs} "
            f"k={self.num_ancillas}",
            f"  max |p_exact - p_measured|: {self.max_abs_probability_error:.3e}",
            f"  total variation:            {self.total_variation:.3e}",
            f"  amplitude uniformity error: {self.amplitude_uniformity_error:.3e}",
            f"  nonzero amplitudes:         {self.nonzero_count}",
            f"  ancillas clean:             {self.ancilla_clean}",
            "  outcome        exact     measured",
        ]
        for row in self.outcomes:
            bits = format(row.outcome, f"0{self.num_outputs}b")
            lines.append(f"  {bits:>7}  {row.exact:.9f}  {row.measured:.9f}")
        return "\n".join(lines)


def distribution_distance(
    exact: ExactDistribution, measured: MeasuredDistribution
) -> DistributionDistance:
    if exact.num_outcomes != measured.num_outcomes:
        raise ValueError(
            f"outcome counts differ: {exact.num_outcomes} vs {measured.num_outcomes}"
        )
    diff = np.abs(exact.probabilities() - measured.probabilities)
    return DistributionDistance(
        max_abs=float(diff.max()), total_variation=float(0.5 * diff.sum())
    )


def qmarginal_grouping(
    state: Statevector, m: int, n: int, tol: Optional[float] = None
) -> Dict[int, List[Tuple[int, complex]]]:
    """Nonzero amplitudes grouped by output value i, as (j, a_j) pairs."""
    tol = get_settings().amplitude_tolerance if tol is None else tol
    groups: Dict[int, List[Tuple[int, complex]]] = {}
    for index, amp in nonzero_amplitudes(state, tol):
        j = index & (2**m - 1)
        i = (index >> m) & (2**n - 1)
        groups.setdefault(i, []).append((j, amp))
    return groups


def verify_qmarginal(
    network: GateNetwork,
    tol: Optional[float] = None,
    amplitude_tol: Optional[float] = None,
    max_qubits: Optional[int] = None,
    enumeration_cap: Optional[int] = None,
) -> VerificationReport:
    """Run the full pipeline and compare against the brute-force oracle."""
    settings = get_settings()
    tol = settings.tolerance if tol is None else tol
    if amplitude_tol is None:
        amplitude_tol = settings.amplitude_tolerance

    exact = brute_force_distribution(network, cap=enumeration_cap)
    u = compile_network(network)
    circuit = build_qmarginal(u)
    state = run(circuit, init_zero(circuit.width, max_qubits=max_qubits))

    m, n = u.m, u.n
    measured = marginal_distribution(state, *u.output_register)
    distance = distribution_distance(exact, measured)

    entries = nonzero_amplitudes(state, amplitude_tol)
    indices = np.array([i for i, _ in entries], dtype=np.int64)
    amps = np.array([a for _, a in entries], dtype=np.complex128)
    expected = 2.0 ** (-m / 2)
    uniformity = float(np.max(np.abs(np.abs(amps) - expected))) if len(amps) else 1.0

    inputs = indices & (2**m - 1)
    outputs = (indices >> m) & (2**n - 1)
    ancilla_clean = bool(np.all((indices >> (m + n)) == 0))
    consistent = bool(np.all(outputs == evaluate_many(network, inputs)))
    if not consistent:
        logger.warning("Output register disagrees with f on some basis states")

    grouped = np.zeros(2**n)
    np.add.at(grouped, outputs, np.abs(amps) ** 2)
    grouping_error = float(np.max(np.abs(grouped - exact.probabilities())))

    report = VerificationReport(
        num_inputs=m,
        num_outputs=n,
        num_ancillas=u.k,
        tolerance=tol,
        max_abs_probability_error=distance.max_abs,
        total_variation=distance.total_variation,
        amplitude_uniformity_error=uniformity,
        ancilla_clean=ancilla_clean,
        outputs_consistent=consistent,
        nonzero_count=len(entries),
        max_imaginary=float(np.max(np.abs(amps.imag))) if len(amps) else 0.0,
        grouping_error=grouping_error,
        outcomes=tuple(
            OutcomeRow(outcome=i, exact=float(e), measured=float(p))
            for i, (e, p) in enumerate(
                zip(exact.probabilities(), measured.probabilities)
            )
        ),
    )
    logger.info(
        "Verified m=%s n=%s k=%s: passed=%s max_err=%.2e",
        m,
        n,
        u.k,
        report.passed,
        report.max_abs_probability_error,
    )
    return report


def operation_audit(network: GateNetwork) -> Dict[str, float]:
    """Operations per classical sample versus operations in U'."""
    u = compile_network(network)
    classical = len(network.gates)
    reversible = len(u.gates)
    return {
        "classical_gates": classical,
        "reversible_gates": reversible,
        "hadamards": u.m,
        "overhead_ratio": (reversible + u.m) / max(classical, 1),
    }

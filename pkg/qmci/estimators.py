"""Maximum-likelihood amplitude estimation and classical Monte Carlo.

MLAE: at each power k of the schedule, `shots` measurements give h_k hits
~ Binomial(shots, sin^2((2k+1) theta)). theta is chosen to maximize

    sum_k h_k log sin^2((2k+1) theta) + (shots - h_k) log cos^2((2k+1) theta)

over a 10^5-point grid on [0, pi/2], refined by bounded scalar minimization
around the best grid point. The estimate is sin^2(theta).
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import minimize_scalar

from compiler.models import QuantumCircuit
from helpers.errors import ResourceLimitError
from qmci.amplification import grover_power_probabilities, grover_queries
from qmci.predicates import OutcomePredicate, exact_amplitude
from qmci.rng import CLASSICAL_STREAM, MLAE_STREAM, make_generator
from sampler_ir.models import GateNetwork
from sampler_ir.network import evaluate_many

logger = logging.getLogger(__name__)

GRID_POINTS = 100_000
_EPS = 1e-15


class EstimationRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    method: str
    estimate: float = Field(..., ge=0.0, le=1.0)
    true_value: float
    queries: int = Field(..., ge=1)
    shots_used: int = Field(..., ge=1)
    seed: int
    stream: Tuple[int, ...] = ()
    schedule: Tuple[int, ...] = ()
    degenerate: bool = False

    @property
    def error(self) -> float:
        return self.estimate - self.true_value


def mlae_queries(schedule: Sequence[int], shots_per_k: int) -> int:
    return shots_per_k * sum(grover_queries(k) for k in schedule)


def mlae_schedule_for_budget(budget: int, shots_per_k: int) -> List[int]:
    """Longest schedule 0, 1, 2, 4, ... whose query cost fits the budget."""
    if shots_per_k < 1:
        raise ValueError("shots_per_k must be at least 1")
    if shots_per_k > budget:
        raise ValueError(
            f"budget {budget} cannot fit a single power at {shots_per_k} shots"
        )
    schedule = [0]
    power = 1
    while mlae_queries(schedule + [power], shots_per_k) <= budget:
        schedule.append(power)
        power *= 2
    return schedule


def _log_likelihood(
    theta: np.ndarray, depths: np.ndarray, hits: np.ndarray, shots: int
) -> np.ndarray:
    theta = np.atleast_1d(theta)
    p = np.sin(np.outer(depths, theta)) ** 2
    p = np.clip(p, _EPS, 1.0 - _EPS)
    hits = hits[:, None]
    return np.sum(hits * np.log(p) + (shots - hits) * np.log1p(-p), axis=0)


def fit_theta(
    schedule: Sequence[int],
    hits: Sequence[int],
    shots: int,
    grid_points: int = GRID_POINTS,
) -> float:
    """Maximum-likelihood theta in [0, pi/2] for the observed hit counts."""
    depths = np.array([grover_queries(k) for k in schedule], dtype=float)
    hits_arr = np.asarray(hits, dtype=float)
    grid = np.linspace(0.0, np.pi / 2, grid_points)
    values = _log_likelihood(grid, depths, hits_arr, shots)
    best = int(np.argmax(values))
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, grid_points - 1)]
    refined = minimize_scalar(
        lambda t: -_log_likelihood(np.array([t]), depths, hits_arr, shots)[0],
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if refined.success and -refined.fun > values[best]:
        return float(refined.x)
    return float(grid[best])


def mlae_from_probabilities(
    probabilities: Dict[int, float],
    schedule: Sequence[int],
    shots_per_k: int,
    seed: int,
    stream: Tuple[int, ...] = (MLAE_STREAM,),
    true_value: float = float("nan"),
) -> EstimationRecord:
    """MLAE run given the exact marked probability at every scheduled power."""
    if not schedule:
        raise ValueError("schedule must not be empty")
    if shots_per_k < 1:
        raise ValueError("shots_per_k must be at least 1")
    rng = make_generator(seed, *stream)
    hits = [int(rng.binomial(shots_per_k, probabilities[k])) for k in schedule]
    degenerate = all(h == 0 for h in hits) or all(h == shots_per_k for h in hits)
    if degenerate:
        logger.warning(
            "Degenerate MLAE hit counts %s; estimate sits on the grid edge", hits
        )
    theta = fit_theta(schedule, hits, shots_per_k)
    estimate = float(np.clip(np.sin(theta) ** 2, 0.0, 1.0))
    return EstimationRecord(
        method="mlae",
        estimate=estimate,
        true_value=true_value,
        queries=mlae_queries(schedule, shots_per_k),
        shots_used=shots_per_k * len(schedule),
        seed=seed,
        stream=tuple(stream),
        schedule=tuple(schedule),
        degenerate=degenerate,
    )


def mlae_estimate(
    circuit: QuantumCircuit,
    pred: OutcomePredicate,
    schedule: Sequence[int],
    shots_per_k: int,
    seed: int,
    stream: Tuple[int, ...] = (MLAE_STREAM,),
    true_value: Optional[float] = None,
    max_qubits: Optional[int] = None,
) -> EstimationRecord:
    """Estimate a = P(f(X) in S) from the Q-marginal circuit by MLAE.

    Without `true_value` the record carries the marked probability of A|0>.
    """
    ks = sorted(set(schedule) | {0})
    probabilities = grover_power_probabilities(
        circuit, pred, ks, max_qubits=max_qubits
    )
    if true_value is None:
        true_value = probabilities[0]
    record = mlae_from_probabilities(
        probabilities, schedule, shots_per_k, seed, stream, true_value
    )
    logger.info(
        "MLAE estimate %.6f (queries=%s, schedule=%s)",
        record.estimate,
        record.queries,
        list(schedule),
    )
    return record


def classical_mc_estimate(
    network: GateNetwork,
    pred: OutcomePredicate,
    num_samples: int,
    seed: int,
    stream: Tuple[int, ...] = (CLASSICAL_STREAM,),
    true_value: Optional[float] = None,
) -> EstimationRecord:
    """Fraction of uniform random inputs x with f(x) in S; one query each."""
    if num_samples < 1:
        raise ValueError("num_samples must be at least 1")
    pred.check_outputs(network.num_outputs)
    if true_value is None:
        try:
            true_value = exact_amplitude(network, pred)
        except ResourceLimitError:
            true_value = float("nan")
    rng = make_generator(seed, *stream)
    inputs = rng.integers(0, 2**network.num_inputs, size=num_samples, dtype=np.int64)
    hits = int(np.count_nonzero(pred.contains(evaluate_many(network, inputs))))
    return EstimationRecord(
        method="classical",
        estimate=hits / num_samples,
        true_value=true_value,
        queries=num_samples,
        shots_used=num_samples,
        seed=seed,
        stream=tuple(stream),
    )

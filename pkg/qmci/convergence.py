"""Query-versus-error study: MLAE against classical Monte Carlo.

For every budget both methods run `repeats` independent seeded estimates.
Classical Monte Carlo spends the whole budget on samples; MLAE uses the
longest power schedule that fits. RMSE against the exact amplitude is then
fitted as log(rmse) = slope * log(queries) + intercept per method.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.stats import linregress

from compiler.marginal_builder import build_qmarginal
from compiler.reversibilizer import compile as compile_network
from qmci.amplification import grover_power_probabilities
from qmci.estimators import (
    EstimationRecord,
    classical_mc_estimate,
    mlae_from_probabilities,
    mlae_schedule_for_budget,
)
from qmci.predicates import OutcomePredicate, validate_predicate
from qmci.rng import CLASSICAL_STREAM, MLAE_STREAM
from sampler_ir.models import GateNetwork
from sampler_ir.network import brute_force_distribution

logger = logging.getLogger(__name__)

METHODS = ("classical", "mlae")


class ConvergenceRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    method: str
    budget: int
    queries: int
    rmse: float


class ConvergenceStudy(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: Tuple[ConvergenceRow, ...]
    slopes: Dict[str, float]
    intercepts: Dict[str, float]
    repeats: int
    seed: int
    true_value: float
    shots_per_k: int

    @property
    def slope_ratio(self) -> float:
        """MLAE slope over classical slope; about 2 for a quadratic speedup."""
        return self.slopes["mlae"] / self.slopes["classical"]

    def to_csv(self) -> str:
        lines = ["method,queries,rmse"]
        lines.extend(f"{r.method},{r.queries},{r.rmse:.12e}" for r in self.rows)
        return "\n".join(lines) + "\n"

    def summary_json(self) -> str:
        return json.dumps(
            {
                "slopes": self.slopes,
                "slope_ratio": self.slope_ratio,
                "intercepts": self.intercepts,
                "repeats": self.repeats,
                "seed": self.seed,
                "true_value": self.true_value,
                "shots_per_k": self.shots_per_k,
            },
            indent=2,
            sort_keys=True,
        )


def _fit(rows: Sequence[ConvergenceRow]) -> Tuple[float, float]:
    points = [(r.queries, r.rmse) for r in rows if r.rmse > 0]
    if len({q for q, _ in points}) < 2:
        return float("nan"), float("nan")
    x = np.log([q for q, _ in points])
    y = np.log([e for _, e in points])
    fit = linregress(x, y)
    return float(fit.slope), float(fit.intercept)


def convergence_study(
    network: GateNetwork,
    pred: OutcomePredicate,
    budgets: Sequence[int],
    repeats: int,
    seed: int,
    shots_per_k: int = 32,
    workers: int = 1,
    enumeration_cap: Optional[int] = None,
    max_qubits: Optional[int] = None,
) -> ConvergenceStudy:
    budgets = list(budgets)
    if not budgets or any(b < 1 for b in budgets):
        raise ValueError("budgets must be positive and nonempty")
    if any(b2 <= b1 for b1, b2 in zip(budgets, budgets[1:])):
        raise ValueError("budgets must be strictly ascending")
    if repeats < 1:
        raise ValueError("repeats must be at least 1")

    pred.check_outputs(network.num_outputs)
    exact = brute_force_distribution(network, cap=enumeration_cap)
    a = validate_predicate(pred, exact)
    schedules = [mlae_schedule_for_budget(b, shots_per_k) for b in budgets]

    circuit = build_qmarginal(compile_network(network))
    all_ks = sorted({k for s in schedules for k in s})
    probabilities = grover_power_probabilities(
        circuit, pred, all_ks, max_qubits=max_qubits
    )

    def mlae_job(b: int, r: int) -> EstimationRecord:
        return mlae_from_probabilities(
            probabilities,
            schedules[b],
            shots_per_k,
            seed,
            stream=(MLAE_STREAM, b, r),
            true_value=a,
        )

    def classical_job(b: int, r: int) -> EstimationRecord:
        return classical_mc_estimate(
            network,
            pred,
            budgets[b],
            seed,
            stream=(CLASSICAL_STREAM, b, r),
            true_value=a,
        )

    jobs = [
        ((method, b, r), mlae_job if method == "mlae" else classical_job)
        for method in METHODS
        for b in range(len(budgets))
        for r in range(repeats)
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda job: job[1](*job[0][1:]), jobs))
    else:
        records = [fn(b, r) for (_, b, r), fn in jobs]
    results = dict(zip((key for key, _ in jobs), records))

    rows: List[ConvergenceRow] = []
    for method in METHODS:
        for b, budget in enumerate(budgets):
            batch = [results[(method, b, r)] for r in range(repeats)]
            errors = np.array([rec.estimate - a for rec in batch])
            rows.append(
                ConvergenceRow(
                    method=method,
                    budget=budget,
                    queries=batch[0].queries,
                    rmse=float(np.sqrt(np.mean(errors**2))),
                )
            )

    slopes: Dict[str, float] = {}
    intercepts: Dict[str, float] = {}
    for method in METHODS:
        fitted = _fit([r for r in rows if r.method == method])
        slopes[method], intercepts[method] = fitted
    logger.info(
        "Convergence study a=%.6f: classical slope %.3f, mlae slope %.3f",
        a,
        slopes["classical"],
        slopes["mlae"],
    )
    return ConvergenceStudy(
        rows=tuple(rows),
        slopes=slopes,
        intercepts=intercepts,
        repeats=repeats,
        seed=seed,
        true_value=a,
        shots_per_k=shots_per_k,
    )

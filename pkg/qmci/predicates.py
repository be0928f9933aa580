"""Outcome predicates (the integrand of the probability being estimated)."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from sampler_ir.models import ExactDistribution, GateNetwork
from sampler_ir.network import brute_force_distribution


class OutcomePredicate(BaseModel):
    """Membership test S over n-bit outcomes.

    mode "set" lists the outcomes; "ge"/"le" compare against a threshold.
    """

    model_config = ConfigDict(frozen=True)

    mode: Literal["set", "ge", "le"]
    outcomes: Tuple[int, ...] = ()
    threshold: Optional[int] = None

    @model_validator(mode="after")
    def _check_payload(self) -> "OutcomePredicate":
        if self.mode == "set":
            if not self.outcomes:
                raise ValueError("set predicate needs at least one outcome")
            if any(o < 0 for o in self.outcomes):
                raise ValueError("outcomes must be nonnegative")
        elif self.threshold is None or self.threshold < 0:
            raise ValueError(f"{self.mode} predicate needs a nonnegative threshold")
        return self

    @classmethod
    def parse(cls, text: str) -> "OutcomePredicate":
        """Parse 'set:0,1', 'ge:K' or 'le:K'."""
        mode, sep, payload = text.partition(":")
        if not sep or mode not in ("set", "ge", "le"):
            raise ValueError(f"invalid predicate '{text}'; use set:a,b | ge:K | le:K")
        try:
            values = [int(v) for v in payload.split(",") if v.strip()]
        except ValueError:
            raise ValueError(f"invalid predicate payload '{payload}'") from None
        if mode == "set":
            return cls(mode="set", outcomes=tuple(sorted(set(values))))
        if len(values) != 1:
            raise ValueError(f"{mode} predicate takes exactly one threshold")
        return cls(mode=mode, threshold=values[0])

    def __str__(self) -> str:
        if self.mode == "set":
            return "set:" + ",".join(map(str, self.outcomes))
        return f"{self.mode}:{self.threshold}"

    def contains(self, values: np.ndarray) -> np.ndarray:
        """Vectorized membership over integer outcomes."""
        values = np.asarray(values)
        if self.mode == "set":
            return np.isin(values, self.outcomes)
        if self.mode == "ge":
            return values >= self.threshold
        return values <= self.threshold

    def check_outputs(self, num_outputs: int) -> None:
        """Referenced outcomes must fit in n bits; a set may not be full."""
        size = 2**num_outputs
        if self.mode == "set":
            if max(self.outcomes) >= size:
                raise ValueError(
                    f"outcome {max(self.outcomes)} does not fit in {num_outputs} bits"
                )
            if len(set(self.outcomes)) == size:
                raise ValueError("set predicate covers every outcome")
        elif self.threshold >= size:
            raise ValueError(
                f"threshold {self.threshold} does not fit in {num_outputs} bits"
            )


def marked_fraction(
    pred: OutcomePredicate, distribution: ExactDistribution
) -> Fraction:
    marked = pred.contains(np.arange(distribution.num_outcomes))
    hits = sum(c for c, hit in zip(distribution.counts, marked) if hit)
    return Fraction(hits, 2**distribution.log2_denominator)


def exact_amplitude(
    network: GateNetwork, pred: OutcomePredicate, cap: Optional[int] = None
) -> float:
    """a = sum of p_i over i in S, from the exact counts."""
    pred.check_outputs(network.num_outputs)
    return float(marked_fraction(pred, brute_force_distribution(network, cap=cap)))


def validate_predicate(
    pred: OutcomePredicate, distribution: ExactDistribution
) -> float:
    """Return a, rejecting predicates whose a is 0 or 1 on this distribution."""
    a = marked_fraction(pred, distribution)
    if a == 0 or a == 1:
        raise ValueError(
            f"predicate {pred} gives a = {a}; amplitude estimation needs 0 < a < 1"
        )
    return float(a)

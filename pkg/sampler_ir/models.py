from __future__ import annotations

from fractions import Fraction
from typing import List, Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

GateOp = Literal["NOT", "AND", "OR", "XOR", "CONST0", "CONST1"]

ARITY = {"NOT": 1, "AND": 2, "OR": 2, "XOR": 2, "CONST0": 0, "CONST1": 0}


class NetworkGate(BaseModel):
    """One classical gate; its result is stored on wire `wire_id`."""

    model_config = ConfigDict(frozen=True)

    wire_id: int = Field(..., ge=0)
    op: GateOp
    sources: Tuple[int, ...] = ()
    name: str = ""

    @model_validator(mode="after")
    def _check_arity(self) -> "NetworkGate":
        if len(self.sources) != ARITY[self.op]:
            raise ValueError(
                f"{self.op} takes {ARITY[self.op]} sources, got {len(self.sources)}"
            )
        return self


class GateNetwork(BaseModel):
    """Classical sampling circuit f: {0,1}^m -> {0,1}^n as a boolean DAG.

    Wires 0..m-1 are the inputs; gate i drives wire m+i. Output bit k reads
    wire output_map[k]. Bit 0 is the least significant bit everywhere.
    """

    model_config = ConfigDict(frozen=True)

    num_inputs: int = Field(..., ge=1)
    num_outputs: int = Field(..., ge=1)
    gates: Tuple[NetworkGate, ...] = ()
    output_map: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_dag(self) -> "GateNetwork":
        m = self.num_inputs
        for i, gate in enumerate(self.gates):
            if gate.wire_id != m + i:
                raise ValueError(
                    f"gate {i} must drive wire {m + i}, found wire {gate.wire_id}"
                )
            for src in gate.sources:
                if src < 0 or src >= gate.wire_id:
                    raise ValueError(
                        f"gate {gate.name or gate.wire_id} reads wire {src} "
                        "which is not an input or an earlier gate"
                    )
        names = [g.name for g in self.gates if g.name]
        if len(names) != len(set(names)):
            raise ValueError("gate names must be unique")
        if len(self.output_map) != self.num_outputs:
            raise ValueError(
                f"output_map has {len(self.output_map)} entries, "
                f"expected {self.num_outputs}"
            )
        for k, wire in enumerate(self.output_map):
            if wire < 0 or wire >= self.num_wires:
                raise ValueError(f"output {k} references undefined wire {wire}")
        return self

    @property
    def num_wires(self) -> int:
        return self.num_inputs + len(self.gates)

    def wire_name(self, wire: int) -> str:
        if wire < self.num_inputs:
            return f"in{wire}"
        gate = self.gates[wire - self.num_inputs]
        return gate.name or f"g{wire - self.num_inputs}"


class ExactDistribution(BaseModel):
    """Exact outcome counts of f over all 2^m inputs.

    The probability of outcome i is counts[i] / 2^log2_denominator.
    """

    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]
    log2_denominator: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_total(self) -> "ExactDistribution":
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")
        if sum(self.counts) != 2**self.log2_denominator:
            raise ValueError(
                f"counts sum to {sum(self.counts)}, expected 2^{self.log2_denominator}"
            )
        return self

    @property
    def num_outcomes(self) -> int:
        return len(self.counts)

    def probability(self, outcome: int) -> Fraction:
        return Fraction(self.counts[outcome], 2**self.log2_denominator)

    def probabilities(self) -> np.ndarray:
        return np.array(self.counts, dtype=float) / float(2**self.log2_denominator)

    def as_fractions(self) -> List[Fraction]:
        return [self.probability(i) for i in range(self.num_outcomes)]

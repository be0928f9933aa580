"""Evaluation of classical sampling circuits and the brute-force oracle."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from helpers.errors import ResourceLimitError
from helpers.settings import get_settings
from sampler_ir.models import ExactDistribution, GateNetwork

logger = logging.getLogger(__name__)

# Inputs tallied per enumeration chunk.
CHUNK_BITS = 16


def _wire_values(network: GateNetwork, inputs: np.ndarray) -> List[np.ndarray]:
    """Boolean value arrays for every wire, one entry per input integer."""
    inputs = np.asarray(inputs, dtype=np.int64)
    values: List[np.ndarray] = [
        ((inputs >> i) & 1).astype(bool) for i in range(network.num_inputs)
    ]
    for gate in network.gates:
        srcs = [values[s] for s in gate.sources]
        if gate.op == "NOT":
            values.append(~srcs[0])
        elif gate.op == "AND":
            values.append(srcs[0] & srcs[1])
        elif gate.op == "OR":
            values.append(srcs[0] | srcs[1])
        elif gate.op == "XOR":
            values.append(srcs[0] ^ srcs[1])
        elif gate.op == "CONST0":
            values.append(np.zeros(inputs.shape, dtype=bool))
        else:
            values.append(np.ones(inputs.shape, dtype=bool))
    return values


def evaluate_many(network: GateNetwork, inputs: np.ndarray) -> np.ndarray:
    """Evaluate f on integer-encoded inputs (bit i = input i).

    Returns integer-encoded outputs (bit k = output k).
    """
    values = _wire_values(network, inputs)
    out = np.zeros(np.shape(inputs), dtype=np.int64)
    for k, wire in enumerate(network.output_map):
        out |= values[wire].astype(np.int64) << k
    return out


def evaluate_int(network: GateNetwork, x: int) -> int:
    if not 0 <= x < 2**network.num_inputs:
        raise ValueError(f"input {x} out of range for {network.num_inputs} bits")
    return int(evaluate_many(network, np.array([x]))[0])


def evaluate(network: GateNetwork, bits: Sequence[int]) -> Tuple[int, ...]:
    """Evaluate f on a bit sequence (index i = input bit i)."""
    if len(bits) != network.num_inputs:
        raise ValueError(
            f"input has {len(bits)} bits, network expects {network.num_inputs}"
        )
    x = sum((int(b) & 1) << i for i, b in enumerate(bits))
    y = evaluate_int(network, x)
    return tuple((y >> k) & 1 for k in range(network.num_outputs))


def _tally(network: GateNetwork, start: int, stop: int) -> np.ndarray:
    outputs = evaluate_many(network, np.arange(start, stop, dtype=np.int64))
    return np.bincount(outputs, minlength=2**network.num_outputs)


def brute_force_distribution(
    network: GateNetwork, cap: Optional[int] = None, workers: int = 1
) -> ExactDistribution:
    """Count |{x : f(x) = i}| for every outcome i by enumerating all 2^m inputs.

    The range is tallied in chunks; with workers > 1 chunks run on a thread
    pool. Counts are summed as Python integers so the result is exact.
    """
    cap = get_settings().enumeration_cap if cap is None else cap
    m = network.num_inputs
    if m > cap:
        raise ResourceLimitError("input bit count", m, cap)

    total = 2**m
    step = 2**CHUNK_BITS
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda b: _tally(network, *b), bounds))
    else:
        partials = [_tally(network, lo, hi) for lo, hi in bounds]

    counts = [0] * (2**network.num_outputs)
    for part in partials:
        for i, c in enumerate(part.tolist()):
            counts[i] += c
    logger.debug("Enumerated %s inputs over %s chunks", total, len(bounds))
    return ExactDistribution(counts=tuple(counts), log2_denominator=m)

"""Built-in network families and the random corpus generator.

Families:
- identity(m): n = m, output k reads input k
- constant(m, n, c): every input maps to c
- popcount(m): n = ceil(log2(m+1)); half/full-adder tree over the inputs
"""

from __future__ import annotations

from collections import deque
from typing import List, Optional, Tuple

import numpy as np

from sampler_ir.models import ARITY, GateNetwork, NetworkGate

_OPS = ("NOT", "AND", "OR", "XOR", "CONST0", "CONST1")


class _Builder:
    """Appends gates with canonical wire ids and g<i> names."""

    def __init__(self, num_inputs: int):
        self.num_inputs = num_inputs
        self.gates: List[NetworkGate] = []

    def add(self, op: str, *sources: int) -> int:
        idx = len(self.gates)
        wire = self.num_inputs + idx
        self.gates.append(
            NetworkGate(wire_id=wire, op=op, sources=tuple(sources), name=f"g{idx}")
        )
        return wire

    def build(self, output_map: List[int]) -> GateNetwork:
        return GateNetwork(
            num_inputs=self.num_inputs,
            num_outputs=len(output_map),
            gates=tuple(self.gates),
            output_map=tuple(output_map),
        )


def _add_numbers(
    b: _Builder, x: Tuple[List[int], int], y: Tuple[List[int], int]
) -> Tuple[List[int], int]:
    """Ripple-carry add two little-endian wire lists with known maxima."""
    x_bits, x_max = x
    y_bits, y_max = y
    total_max = x_max + y_max
    width = total_max.bit_length()
    out: List[int] = []
    carry: Optional[int] = None
    for i in range(width):
        terms = [bits[i] for bits in (x_bits, y_bits) if i < len(bits)]
        if carry is not None:
            terms.append(carry)
        need_carry = i + 1 < width
        carry = None
        if len(terms) == 1:
            out.append(terms[0])
        elif len(terms) == 2:
            out.append(b.add("XOR", terms[0], terms[1]))
            if need_carry:
                carry = b.add("AND", terms[0], terms[1])
        else:
            a, c, cin = terms
            partial = b.add("XOR", a, c)
            out.append(b.add("XOR", partial, cin))
            if need_carry:
                g = b.add("AND", a, c)
                p = b.add("AND", partial, cin)
                carry = b.add("OR", g, p)
    return out, total_max


def _popcount(m: int) -> GateNetwork:
    b = _Builder(m)
    queue = deque(([i], 1) for i in range(m))
    while len(queue) > 1:
        x = queue.popleft()
        y = queue.popleft()
        queue.append(_add_numbers(b, x, y))
    bits, _ = queue[0]
    return b.build(bits)


def make_builtin(
    name: str, m: int, n: Optional[int] = None, c: Optional[int] = None
) -> GateNetwork:
    """Build one of the named network families."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if name == "identity":
        if n is not None and n != m:
            raise ValueError("identity has n = m")
        return _Builder(m).build(list(range(m)))
    if name == "constant":
        if n is None or n < 1:
            raise ValueError("constant needs n >= 1")
        c = 0 if c is None else c
        if not 0 <= c < 2**n:
            raise ValueError(f"constant value {c} does not fit in {n} bits")
        b = _Builder(m)
        outputs = [b.add("CONST1" if (c >> k) & 1 else "CONST0") for k in range(n)]
        return b.build(outputs)
    if name == "popcount":
        if n is not None and n != m.bit_length():
            raise ValueError(f"popcount of {m} bits has n = {m.bit_length()}")
        return _popcount(m)
    raise ValueError(f"unknown builtin '{name}'")


def parse_builtin(text: str) -> GateNetwork:
    """Parse 'popcount:3', 'identity:4' or 'constant:2,2,3' (m,n,c)."""
    family, _, params = text.partition(":")
    try:
        values = [int(p) for p in params.split(",") if p.strip()]
    except ValueError:
        raise ValueError(f"invalid builtin parameters '{params}'") from None
    if not values:
        raise ValueError(f"builtin '{text}' needs at least m")
    return make_builtin(family, *values)


def random_network(
    rng: np.random.Generator,
    max_inputs: int = 10,
    max_outputs: int = 4,
    max_gates: int = 64,
    max_width: Optional[int] = None,
) -> GateNetwork:
    """Draw a random DAG: op uniform over the alphabet, sources uniform over
    earlier wires, outputs uniform over all wires.

    With max_width, the gate count is capped so that the compiled circuit
    (m + n + one ancilla per gate) fits in max_width qubits.
    """
    m = int(rng.integers(1, max_inputs + 1))
    n = int(rng.integers(1, max_outputs + 1))
    gate_cap = max_gates
    if max_width is not None:
        if max_width < 2:
            raise ValueError("max_width must leave room for one input and one output")
        n = min(n, max_width - 1)
        m = min(m, max_width - n)
        gate_cap = max(0, min(max_gates, max_width - m - n))
    num_gates = int(rng.integers(0, gate_cap + 1))

    b = _Builder(m)
    for _ in range(num_gates):
        op = _OPS[int(rng.integers(len(_OPS)))]
        wires = m + len(b.gates)
        b.add(op, *(int(rng.integers(wires)) for _ in range(ARITY[op])))
    total = m + len(b.gates)
    return b.build([int(rng.integers(total)) for _ in range(n)])

"""Netlist text format.

    # comment to end of line; blank lines are ignored
    inputs <m>
    outputs <n>
    gate <name> = <OP> <src> [<src>]
    out <k> = <src>

`src` is `in<i>` (0 <= i < m) or a gate defined on an earlier line. Every
output index 0..n-1 appears exactly once.
"""

from __future__ import annotations

import logging
import re
from typing import Dict, List, Optional, Tuple

from helpers.errors import NetlistError
from sampler_ir.models import ARITY, GateNetwork, NetworkGate

logger = logging.getLogger(__name__)

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INPUT_RE = re.compile(r"^in(\d+)$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _header(tokens: List[str], keyword: str, lineno: int) -> int:
    if len(tokens) != 2 or tokens[0] != keyword:
        raise NetlistError(f"expected '{keyword} <count>'", lineno)
    try:
        value = int(tokens[1])
    except ValueError:
        raise NetlistError(f"'{keyword}' count must be an integer", lineno) from None
    if value < 1:
        raise NetlistError(f"'{keyword}' count must be at least 1", lineno)
    return value


def _resolve(token: str, lineno: int, m: int, wires: Dict[str, int]) -> Optional[int]:
    match = _INPUT_RE.match(token)
    if match:
        idx = int(match.group(1))
        if idx >= m:
            raise NetlistError(f"input '{token}' out of range for {m} inputs", lineno)
        return idx
    return wires.get(token)


def _parse_gate(
    tokens: List[str], lineno: int, m: int, wires: Dict[str, int], wire_id: int
) -> NetworkGate:
    if len(tokens) < 4 or tokens[2] != "=":
        raise NetlistError("expected 'gate <name> = <OP> <src>...'", lineno)
    name, op, srcs = tokens[1], tokens[3], tokens[4:]
    if not _NAME_RE.match(name) or _INPUT_RE.match(name):
        raise NetlistError(f"invalid gate name '{name}'", lineno)
    if name in wires:
        raise NetlistError(f"duplicate wire '{name}'", lineno)
    if op not in ARITY:
        raise NetlistError(f"unknown operation '{op}'", lineno)
    if len(srcs) != ARITY[op]:
        raise NetlistError(f"{op} takes {ARITY[op]} sources, got {len(srcs)}", lineno)
    sources = []
    for src in srcs:
        wire = _resolve(src, lineno, m, wires)
        if wire is None:
            raise NetlistError(f"undefined wire '{src}'", lineno)
        sources.append(wire)
    return NetworkGate(wire_id=wire_id, op=op, sources=tuple(sources), name=name)


def _parse_out(tokens: List[str], lineno: int, n: int) -> int:
    if len(tokens) != 4 or tokens[2] != "=":
        raise NetlistError("expected 'out <k> = <src>'", lineno)
    try:
        k = int(tokens[1])
    except ValueError:
        raise NetlistError("output index must be an integer", lineno) from None
    if not 0 <= k < n:
        raise NetlistError(f"output index {k} out of range for {n}", lineno)
    return k


def parse_netlist(text: str) -> GateNetwork:
    """Parse netlist text into a validated GateNetwork.

    Raises NetlistError carrying the 1-based line number of the offending line.
    """
    lines = [(i + 1, _strip(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(n, s) for n, s in lines if s]
    if not lines:
        raise NetlistError("missing 'inputs' header", None)
    if len(lines) < 2:
        raise NetlistError("missing 'outputs' header", lines[0][0])

    m = _header(lines[0][1].split(), "inputs", lines[0][0])
    n = _header(lines[1][1].split(), "outputs", lines[1][0])

    wires: Dict[str, int] = {}
    gates: List[NetworkGate] = []
    outputs: Dict[int, Tuple[str, int]] = {}

    for lineno, content in lines[2:]:
        tokens = content.split()
        keyword = tokens[0]
        if keyword == "gate":
            gate = _parse_gate(tokens, lineno, m, wires, m + len(gates))
            gates.append(gate)
            wires[gate.name] = gate.wire_id
        elif keyword == "out":
            k = _parse_out(tokens, lineno, n)
            if k in outputs:
                raise NetlistError(f"output {k} assigned twice", lineno)
            outputs[k] = (tokens[3], lineno)
        elif keyword in ("inputs", "outputs"):
            raise NetlistError(f"duplicate '{keyword}' header", lineno)
        else:
            raise NetlistError(f"unrecognised statement '{keyword}'", lineno)

    output_map = []
    for k in range(n):
        if k not in outputs:
            raise NetlistError(f"output {k} is never assigned", None)
        src, lineno = outputs[k]
        wire = _resolve(src, lineno, m, wires)
        if wire is None:
            raise NetlistError(f"undefined wire '{src}'", lineno)
        output_map.append(wire)

    network = GateNetwork(
        num_inputs=m, num_outputs=n, gates=tuple(gates), output_map=tuple(output_map)
    )
    logger.debug("Parsed netlist: m=%s n=%s gates=%s", m, n, len(gates))
    return network


def emit_netlist(network: GateNetwork) -> str:
    """Render the canonical text form: headers, gates in DAG order, outputs."""
    out = [f"inputs {network.num_inputs}", f"outputs {network.num_outputs}"]
    for gate in network.gates:
        srcs = " ".join(network.wire_name(s) for s in gate.sources)
        name = network.wire_name(gate.wire_id)
        out.append(f"gate {name} = {gate.op} {srcs}".rstrip())
    for k, wire in enumerate(network.output_map):
        out.append(f"out {k} = {network.wire_name(wire)}")
    return "\n".join(out)

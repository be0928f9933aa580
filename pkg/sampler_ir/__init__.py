"""sampler_ir package init"""

from sampler_ir.builtins import make_builtin, random_network
from sampler_ir.models import ExactDistribution, GateNetwork, GateOp, NetworkGate
from sampler_ir.netlist import emit_netlist, parse_netlist
from sampler_ir.network import (
    brute_force_distribution,
    evaluate,
    evaluate_int,
    evaluate_many,
)

__all__ = [
    "ExactDistribution",
    "GateNetwork",
    "GateOp",
    "NetworkGate",
    "brute_force_distribution",
    "emit_netlist",
    "evaluate",
    "evaluate_int",
    "evaluate_many",
    "make_builtin",
    "parse_netlist",
    "random_network",
]

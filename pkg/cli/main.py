"""qmarginal command-line front end.

Usage:
  qmarginal compile  <net> [--emit PATH] [--stats]
  qmarginal simulate <net> [--marginal] [--shots N --seed S]
                     [--dump-state [--amplitude-tol T]]
  qmarginal verify   <net> [--tol 1e-9] [--amplitude-tol 1e-12] [--json]
  qmarginal qmci     <net> --pred ge:2 [--schedule 0,1,2,4,8] [--shots 64]
  qmarginal bench    <net> --pred ge:2 [--budgets 64,...] [--repeats 50]

Any <net> may be replaced by `--builtin popcount:3`.

Exit codes: 0 success, 1 verification failed, 2 usage or input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from analysis.verification import operation_audit, verify_qmarginal
from compiler.circuit_io import dump_circuit
from compiler.marginal_builder import build_qmarginal
from compiler.reversibilizer import compile as compile_network
from compiler.reversibilizer import stats
from helpers.errors import ResourceLimitError
from helpers.settings import get_settings
from qmci.convergence import convergence_study
from qmci.estimators import EstimationRecord, classical_mc_estimate, mlae_estimate
from qmci.predicates import OutcomePredicate, validate_predicate
from qmci.rng import make_generator
from sampler_ir.builtins import parse_builtin
from sampler_ir.models import GateNetwork
from sampler_ir.netlist import parse_netlist
from sampler_ir.network import brute_force_distribution
from simulator.statevector import (
    dump_state,
    init_zero,
    marginal_distribution,
    run,
    sample_register,
)

logger = logging.getLogger("qmarginal")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

DEFAULT_BUDGETS = tuple(2**e for e in range(6, 15))
RECORD_COLUMNS = "method,estimate,true_value,queries,shots_used,seed"


def _int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got '{text}'"
        ) from None


class CommandConfig(BaseModel):
    """Validated view of one invocation's arguments."""

    model_config = ConfigDict(frozen=True)

    command: Literal["compile", "simulate", "verify", "qmci", "bench"]
    netlist: Optional[Path] = None
    builtin: Optional[str] = None
    log_level: Optional[str] = None
    enumeration_cap: Optional[int] = Field(None, ge=1)
    max_qubits: Optional[int] = Field(None, ge=1)

    # compile
    emit: Optional[Path] = None
    stats: bool = False
    # simulate
    marginal: bool = False
    dump_state: bool = False
    shots: Optional[int] = Field(None, ge=1)
    seed: int = 7
    # verify
    tol: Optional[float] = Field(None, gt=0)
    amplitude_tol: Optional[float] = Field(None, ge=0)
    json_output: bool = False
    # qmci / bench
    pred: Optional[str] = None
    schedule: Tuple[int, ...] = (0, 1, 2, 4, 8)
    budgets: Tuple[int, ...] = DEFAULT_BUDGETS
    repeats: int = Field(50, ge=1)
    workers: int = Field(1, ge=1)
    csv: Optional[Path] = None
    summary: Optional[Path] = None

    @field_validator("schedule")
    @classmethod
    def _check_schedule(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v or min(v) < 0:
            raise ValueError("schedule must be nonempty and nonnegative")
        return v

    @model_validator(mode="after")
    def _check_source(self) -> "CommandConfig":
        if (self.netlist is None) == (self.builtin is None):
            raise ValueError("give exactly one of a netlist path or --builtin")
        if self.command in ("qmci", "bench") and self.pred is None:
            raise ValueError(f"{self.command} needs --pred")
        return self

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "CommandConfig":
        values = {k: v for k, v in vars(ns).items() if v is not None}
        values.pop("func", None)
        if "json" in values:
            values["json_output"] = values.pop("json")
        return cls(**values)

    def predicate(self) -> OutcomePredicate:
        return OutcomePredicate.parse(self.pred or "")


def load_network(config: CommandConfig) -> GateNetwork:
    if config.builtin is not None:
        return parse_builtin(config.builtin)
    return parse_netlist(Path(config.netlist).read_text())


def _record_row(record: EstimationRecord) -> str:
    return (
        f"{record.method},{record.estimate:.12g},{record.true_value:.12g},"
        f"{record.queries},{record.shots_used},{record.seed}"
    )


def cmd_compile(config: CommandConfig) -> int:
    network = load_network(config)
    circuit = compile_network(network)
    text = dump_circuit(circuit)
    if config.emit is not None:
        config.emit.write_text(text)
        logger.info("Wrote %s gates to %s", len(circuit.gates), config.emit)
    if config.stats:
        payload = {"circuit": stats(circuit), "audit": operation_audit(network)}
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif config.emit is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_simulate(config: CommandConfig) -> int:
    network = load_network(config)
    circuit = build_qmarginal(compile_network(network))
    state = run(circuit, init_zero(circuit.width, max_qubits=config.max_qubits))
    register = circuit.output_register
    if config.dump_state:
        tol = config.amplitude_tol
        if tol is None:
            tol = get_settings().amplitude_tolerance
        print(dump_state(state, tol))
    if config.shots is not None:
        rng = make_generator(config.seed, 0)
        counts = sample_register(state, *register, config.shots, rng)
        for outcome, count in enumerate(counts.tolist()):
            print(f"{outcome} {count}")
    if config.marginal or not (config.dump_state or config.shots):
        measured = marginal_distribution(state, *register)
        for outcome, p in enumerate(measured.probabilities.tolist()):
            print(f"{outcome} {p:.15g}")
    return EXIT_OK


def cmd_verify(config: CommandConfig) -> int:
    network = load_network(config)
    report = verify_qmarginal(
        network,
        tol=config.tol,
        amplitude_tol=config.amplitude_tol,
        max_qubits=config.max_qubits,
        enumeration_cap=config.enumeration_cap,
    )
    print(report.to_json() if config.json_output else report.render_text())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_qmci(config: CommandConfig) -> int:
    network = load_network(config)
    pred = config.predicate()
    pred.check_outputs(network.num_outputs)
    exact = brute_force_distribution(network, cap=config.enumeration_cap)
    a = validate_predicate(pred, exact)
    circuit = build_qmarginal(compile_network(network))
    shots = config.shots or 64
    mlae = mlae_estimate(
        circuit,
        pred,
        config.schedule,
        shots,
        config.seed,
        true_value=a,
        max_qubits=config.max_qubits,
    )
    classical = classical_mc_estimate(
        network, pred, mlae.queries, config.seed, true_value=a
    )
    print(RECORD_COLUMNS)
    print(_record_row(mlae))
    print(_record_row(classical))
    return EXIT_OK


def cmd_bench(config: CommandConfig) -> int:
    network = load_network(config)
    study = convergence_study(
        network,
        config.predicate(),
        config.budgets,
        config.repeats,
        config.seed,
        shots_per_k=config.shots or 32,
        workers=config.workers,
        enumeration_cap=config.enumeration_cap,
        max_qubits=config.max_qubits,
    )
    table = study.to_csv()
    summary = study.summary_json() + "\n"
    if config.csv is not None:
        config.csv.write_text(table)
    else:
        sys.stdout.write(table)
    if config.summary is not None:
        config.summary.write_text(summary)
    elif config.csv is not None:
        sys.stdout.write(summary)
    else:
        sys.stderr.write(summary)
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("netlist", nargs="?", type=Path, help="netlist file")
    p.add_argument("--builtin", help="built-in network, e.g. popcount:3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qmarginal", description="Q-marginal construction toolkit."
    )
    ap.add_argument("--log-level", help="override LOG_LEVEL")
    ap.add_argument("--enumeration-cap", type=int, help="max input bits to enumerate")
    ap.add_argument("--max-qubits", type=int, help="max statevector width")
    sub = ap.add_subparsers(dest="command", required=True)

    apc = sub.add_parser("compile", help="Compile a netlist to a reversible circuit.")
    _add_source(apc)
    apc.add_argument("--emit", type=Path, help="write the serialized circuit here")
    apc.add_argument("--stats", action="store_true", help="print size and audit")
    apc.set_defaults(func=cmd_compile)

    aps = sub.add_parser("simulate", help="Run U' on |0> and report the output.")
    _add_source(aps)
    aps.add_argument("--marginal", action="store_true", help="output marginal")
    aps.add_argument("--dump-state", action="store_true", help="nonzero amplitudes")
    aps.add_argument("--shots", type=int, help="sample the output register")
    aps.add_argument(
        "--amplitude-tol", type=float, help="smallest amplitude --dump-state prints"
    )
    aps.add_argument("--seed", type=int)
    aps.set_defaults(func=cmd_simulate)

    apv = sub.add_parser("verify", help="Check U' against the brute-force oracle.")
    _add_source(apv)
    apv.add_argument("--tol", type=float)
    apv.add_argument("--amplitude-tol", type=float, help="nonzero amplitude cutoff")
    apv.add_argument("--json", action="store_true", help="machine-readable report")
    apv.set_defaults(func=cmd_verify)

    apq = sub.add_parser("qmci", help="One MLAE and one classical estimate.")
    _add_source(apq)
    apq.add_argument("--pred", required=True, help="set:a,b | ge:K | le:K")
    apq.add_argument("--schedule", type=_int_list)
    apq.add_argument("--shots", type=int, help="shots per power (default 64)")
    apq.add_argument("--seed", type=int)
    apq.set_defaults(func=cmd_qmci)

    apb = sub.add_parser("bench", help="Query-versus-RMSE convergence study.")
    _add_source(apb)
    apb.add_argument("--pred", required=True, help="set:a,b | ge:K | le:K")
    apb.add_argument("--budgets", type=_int_list)
    apb.add_argument("--repeats", type=int)
    apb.add_argument("--seed", type=int)
    apb.add_argument("--shots", type=int, help="MLAE shots per power (default 32)")
    apb.add_argument("--workers", type=int)
    apb.add_argument("--csv", type=Path, help="write the table here")
    apb.add_argument("--summary", type=Path, help="write the JSON summary here")
    apb.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        level = (ns.log_level or get_settings().log_level).upper()
        logging.basicConfig(
            level=level, format="%(asctime)s %(levelname)s %(name)s - %(message)s"
        )
        config = CommandConfig.from_namespace(ns)
        return ns.func(config)
    except ResourceLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.exception("Unhandled error")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED


def run_cli(args: Optional[List[str]] = None) -> None:
    sys.exit(main(args))


if __name__ == "__main__":
    run_cli()

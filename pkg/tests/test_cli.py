import json
from pathlib import Path

import pytest

import analysis.verification as verification
from cli.main import CommandConfig, main
from compiler.circuit_io import load_circuit
from compiler.reversibilizer import compile
from sampler_ir.builtins import make_builtin

POPCOUNT3 = Path(__file__).resolve().parent.parent / "corpus" / "popcount3.net"


def test_verify_corpus_file(capsys):
    assert main(["verify", str(POPCOUNT3)]) == 0
    assert "PASSED" in capsys.readouterr().out


def test_verify_json(capsys):
    assert main(["verify", "--builtin", "popcount:3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True


def test_verify_failure_exit_code(monkeypatch, capsys):
    wrong = compile(make_builtin("constant", 2, 2, 3))
    monkeypatch.setattr(verification, "compile_network", lambda net: wrong)
    assert main(["verify", "--builtin", "identity:2"]) == 1
    assert "FAILED" in capsys.readouterr().out


def test_undefined_output_wire_is_a_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.net"
    bad.write_text("inputs 1\noutputs 1\nout 0 = g7\n")
    assert main(["verify", str(bad)]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: line 3:")
    assert "g7" in err


def test_missing_file_and_bad_arguments(tmp_path):
    assert main(["verify", str(tmp_path / "nope.net")]) == 2
    assert main(["verify"]) == 2
    assert main(["verify", str(POPCOUNT3), "--builtin", "popcount:3"]) == 2
    assert main(["qmci", "--builtin", "popcount:3"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["qmci", "--builtin", "popcount:3", "--pred", "le:3"]) == 2
    qmci = ["qmci", "--builtin", "popcount:3", "--pred", "ge:2"]
    assert main(qmci + ["--schedule", "a"]) == 2


def test_resource_caps_exit_3(capsys):
    assert main(["--max-qubits", "4", "verify", "--builtin", "popcount:3"]) == 3
    assert main(["--enumeration-cap", "2", "verify", "--builtin", "popcount:3"]) == 3
    assert "exceeds" in capsys.readouterr().err


def test_simulate_marginal(capsys):
    assert main(["simulate", "--marginal", str(POPCOUNT3)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    probs = [float(line.split()[1]) for line in lines]
    assert probs == pytest.approx([0.125, 0.375, 0.375, 0.125], abs=1e-12)
    assert sum(probs) == pytest.approx(1.0)


def test_simulate_dump_state_and_shots(capsys):
    assert main(["simulate", "--builtin", "popcount:3", "--dump-state"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 8
    args = ["simulate", "--builtin", "popcount:3", "--shots", "400", "--seed", "3"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert sum(int(line.split()[1]) for line in first.splitlines()) == 400


def test_amplitude_tol_flag_sets_the_cutoff(capsys):
    args = ["--builtin", "popcount:3", "--amplitude-tol", "0.5"]
    assert main(["simulate", "--dump-state", *args]) == 0
    assert capsys.readouterr().out.strip() == ""
    assert main(["verify", "--json", *args]) == 1
    assert json.loads(capsys.readouterr().out)["nonzero_count"] == 0
    assert main(["verify", "--json", "--builtin", "popcount:3"]) == 0
    assert json.loads(capsys.readouterr().out)["nonzero_count"] == 8


def test_compile_emit_round_trips(tmp_path, capsys):
    target = tmp_path / "u.circ"
    assert main(["compile", str(POPCOUNT3), "--emit", str(target)]) == 0
    loaded = load_circuit(target.read_text())
    assert loaded.gates == compile(make_builtin("popcount", 3)).gates


def test_compile_stats(capsys):
    assert main(["compile", "--builtin", "identity:2", "--stats"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["circuit"]["width"] == 4
    assert payload["circuit"]["counts"] == {"CNOT": 2}
    assert payload["audit"]["hadamards"] == 2


def test_compile_without_flags_prints_circuit(capsys):
    assert main(["compile", "--builtin", "identity:1"]) == 0
    assert capsys.readouterr().out == "qubits 1 1 0\nCNOT 0 1\n"


def test_qmci_rows(capsys):
    args = ["qmci", "--builtin", "popcount:3", "--pred", "ge:2", "--seed", "7"]
    assert main(args) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "method,estimate,true_value,queries,shots_used,seed"
    mlae = lines[1].split(",")
    classical = lines[2].split(",")
    assert mlae[0] == "mlae" and classical[0] == "classical"
    # default schedule 0,1,2,4,8 at 64 shots
    assert mlae[3] == classical[3] == "2240"
    assert mlae[5] == "7"


def test_bench_writes_csv_and_summary(tmp_path, capsys):
    csv_path = tmp_path / "study.csv"
    summary_path = tmp_path / "study.json"
    args = [
        "bench",
        "--builtin",
        "popcount:3",
        "--pred",
        "ge:2",
        "--budgets",
        "64,128,256",
        "--repeats",
        "3",
        "--csv",
        str(csv_path),
        "--summary",
        str(summary_path),
    ]
    assert main(args) == 0
    assert csv_path.read_text().splitlines()[0] == "method,queries,rmse"
    assert len(csv_path.read_text().splitlines()) == 7
    assert json.loads(summary_path.read_text())["repeats"] == 3


def test_bench_to_stdout_puts_summary_on_stderr(capsys):
    args = ["bench", "--builtin", "popcount:3", "--pred", "ge:2"]
    args += ["--budgets", "64,128", "--repeats", "2"]
    assert main(args) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("method,queries,rmse\n")
    assert json.loads(captured.err[captured.err.index("{") :])["seed"] == 7


def test_command_config_validation():
    config = CommandConfig(command="verify", builtin="popcount:3")
    assert config.seed == 7 and config.repeats == 50
    with pytest.raises(ValueError):
        CommandConfig(command="verify")
    with pytest.raises(ValueError):
        CommandConfig(command="bench", builtin="popcount:3")
    with pytest.raises(ValueError):
        CommandConfig(command="qmci", builtin="popcount:3", pred="ge:2", schedule=())

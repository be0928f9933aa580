import numpy as np
import pytest
from pydantic import ValidationError

from compiler.models import ReversibleCircuit, ReversibleGate, inverse
from compiler.reversibilizer import (
    classical_simulate,
    classical_simulate_many,
    compile,
    stats,
)
from sampler_ir.builtins import make_builtin
from sampler_ir.models import GateNetwork, NetworkGate
from sampler_ir.network import evaluate_int


def _basis(circuit, x, y=0):
    m, n = circuit.m, circuit.n
    bits = [(x >> i) & 1 for i in range(m)] + [(y >> i) & 1 for i in range(n)]
    return bits + [0] * circuit.k


def _output_value(circuit, bits):
    return sum(b << i for i, b in enumerate(bits[circuit.m : circuit.m + circuit.n]))


def test_identity_compiles_to_copy_phase_only():
    circuit = compile(make_builtin("identity", 2))
    assert circuit.k == 0
    assert [(g.kind, g.controls, g.target) for g in circuit.gates] == [
        ("CNOT", (0,), 2),
        ("CNOT", (1,), 3),
    ]
    assert classical_simulate(circuit, [1, 0, 0, 0]) == [1, 0, 1, 0]


def test_identity_stats():
    assert stats(compile(make_builtin("identity", 2))) == {
        "width": 4,
        "gate_count": 2,
        "ancilla_count": 0,
        "counts": {"CNOT": 2},
    }
    assert stats(compile(make_builtin("identity", 1)))["counts"] == {"CNOT": 1}


def test_constant_one_sets_output_for_every_input():
    circuit = compile(make_builtin("constant", 1, 1, 1))
    # compute X on the ancilla, copy, uncompute
    assert [g.kind for g in circuit.gates] == ["X", "CNOT", "X"]
    for x in range(2):
        out = classical_simulate(circuit, _basis(circuit, x))
        assert _output_value(circuit, out) == 1
        assert out[circuit.m + circuit.n :] == [0] * circuit.k


def test_popcount3_outputs_popcount_with_clean_ancillas():
    net = make_builtin("popcount", 3)
    circuit = compile(net)
    assert circuit.k == len(net.gates)
    for x in range(8):
        out = classical_simulate(circuit, _basis(circuit, x))
        assert _output_value(circuit, out) == bin(x).count("1")
        assert out[: circuit.m] == [(x >> i) & 1 for i in range(3)]
        assert not any(out[circuit.m + circuit.n :])


def test_popcount3_gate_count_mirrors_compute_phase():
    circuit = compile(make_builtin("popcount", 3))
    s = stats(circuit)
    compute = (s["gate_count"] - circuit.n) // 2
    assert s["gate_count"] == 2 * compute + circuit.n
    # three XORs (two CNOTs each) and two ANDs (one CCNOT each)
    assert compute == 8
    assert s["counts"] == {"CNOT": 14, "CCNOT": 4}
    head = circuit.gates[:compute]
    tail = circuit.gates[compute + circuit.n :]
    assert tuple(reversed(tail)) == head


def test_applying_twice_cancels_the_output():
    circuit = compile(make_builtin("popcount", 3))
    for x in range(8):
        start = _basis(circuit, x)
        assert classical_simulate(circuit, classical_simulate(circuit, start)) == start


def test_xor_into_nonzero_output_register():
    net = make_builtin("popcount", 3)
    circuit = compile(net)
    for x in range(8):
        for y in range(4):
            out = classical_simulate(circuit, _basis(circuit, x, y))
            assert _output_value(circuit, out) == y ^ evaluate_int(net, x)


@pytest.mark.parametrize("op, expected", [("AND", 1), ("OR", 1), ("XOR", 0)])
def test_duplicated_sources(op, expected):
    net = GateNetwork(
        num_inputs=1,
        num_outputs=1,
        gates=(NetworkGate(wire_id=1, op=op, sources=(0, 0)),),
        output_map=(1,),
    )
    circuit = compile(net)
    kinds = [g.kind for g in circuit.gates]
    assert "CCNOT" not in kinds
    out = classical_simulate(circuit, _basis(circuit, 1))
    assert _output_value(circuit, out) == expected == evaluate_int(net, 1)


def test_batch_simulation_matches_scalar():
    circuit = compile(make_builtin("popcount", 4))
    rng = np.random.default_rng(9)
    states = rng.integers(0, 2, size=(40, circuit.width)).astype(bool)
    batch = classical_simulate_many(circuit, states)
    for row, result in zip(states, batch):
        assert classical_simulate(circuit, row.astype(int).tolist()) == list(
            result.astype(int)
        )
    with pytest.raises(ValueError):
        classical_simulate_many(circuit, states[:, :-1])
    with pytest.raises(ValueError):
        classical_simulate(circuit, [0, 1])


def test_inverse_reverses_gate_list():
    circuit = compile(make_builtin("popcount", 3))
    undone = inverse(circuit)
    assert isinstance(undone, ReversibleCircuit)
    assert undone.gates == tuple(reversed(circuit.gates))


def test_gate_model_validation():
    with pytest.raises(ValidationError):
        ReversibleGate(kind="H", target=0)
    with pytest.raises(ValidationError):
        ReversibleGate(kind="CNOT", target=1, controls=(1,))
    with pytest.raises(ValidationError):
        ReversibleGate(kind="CCNOT", target=2, controls=(0,))
    with pytest.raises(ValidationError):
        ReversibleCircuit(m=1, n=1, gates=(ReversibleGate(kind="X", target=0),))
    with pytest.raises(ValidationError):
        ReversibleCircuit(m=1, n=1, gates=(ReversibleGate(kind="X", target=2),))

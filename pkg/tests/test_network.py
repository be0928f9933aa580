from math import comb

import numpy as np
import pytest

from helpers.errors import ResourceLimitError
from sampler_ir.builtins import make_builtin, parse_builtin, random_network
from sampler_ir.models import ExactDistribution, GateNetwork, NetworkGate
from sampler_ir.network import (
    brute_force_distribution,
    evaluate,
    evaluate_int,
    evaluate_many,
)


def test_popcount_of_101_is_two():
    net = make_builtin("popcount", 3)
    # little-endian: (0, 1) is the integer 2
    assert evaluate(net, [1, 0, 1]) == (0, 1)
    assert evaluate_int(net, 0b101) == 2


def test_identity_passes_bits_through():
    net = make_builtin("identity", 4)
    assert evaluate(net, [1, 0, 1, 1]) == (1, 0, 1, 1)


def test_constant_ignores_input():
    net = make_builtin("constant", 3, 2, 2)
    assert {evaluate_int(net, x) for x in range(8)} == {2}


def test_evaluate_rejects_wrong_length():
    with pytest.raises(ValueError):
        evaluate(make_builtin("identity", 2), [1])
    with pytest.raises(ValueError):
        evaluate_int(make_builtin("identity", 2), 4)


def test_evaluate_many_agrees_with_scalar_evaluation():
    rng = np.random.default_rng(5)
    for _ in range(20):
        net = random_network(rng)
        xs = np.arange(2**net.num_inputs)
        batch = evaluate_many(net, xs)
        for x in rng.choice(xs, size=min(16, len(xs)), replace=False):
            bits = [(int(x) >> i) & 1 for i in range(net.num_inputs)]
            out = evaluate(net, bits)
            assert batch[x] == sum(b << k for k, b in enumerate(out))


def test_every_gate_op_evaluates():
    gates = (
        NetworkGate(wire_id=2, op="NOT", sources=(0,)),
        NetworkGate(wire_id=3, op="AND", sources=(0, 1)),
        NetworkGate(wire_id=4, op="OR", sources=(0, 1)),
        NetworkGate(wire_id=5, op="XOR", sources=(0, 1)),
        NetworkGate(wire_id=6, op="CONST0"),
        NetworkGate(wire_id=7, op="CONST1"),
    )
    net = GateNetwork(
        num_inputs=2, num_outputs=6, gates=gates, output_map=(2, 3, 4, 5, 6, 7)
    )
    # inputs (in0, in1) = (1, 0)
    assert evaluate(net, [1, 0]) == (0, 0, 1, 1, 0, 1)
    assert evaluate(net, [1, 1]) == (0, 1, 1, 0, 0, 1)


def test_brute_force_popcount3():
    dist = brute_force_distribution(make_builtin("popcount", 3))
    assert dist.counts == (1, 3, 3, 1)
    assert dist.log2_denominator == 3


def test_brute_force_identity_and_constant():
    assert brute_force_distribution(make_builtin("identity", 2)).counts == (1, 1, 1, 1)
    assert brute_force_distribution(make_builtin("constant", 2, 1, 0)).counts == (4, 0)


@pytest.mark.parametrize("m", range(1, 11))
def test_popcount_follows_binomial_law(m):
    dist = brute_force_distribution(make_builtin("popcount", m))
    assert dist.num_outcomes == 2 ** m.bit_length()
    expected = [comb(m, i) for i in range(m + 1)]
    expected += [0] * (dist.num_outcomes - m - 1)
    assert list(dist.counts) == expected


def test_workers_give_identical_counts():
    net = make_builtin("popcount", 18)
    single = brute_force_distribution(net, workers=1)
    pooled = brute_force_distribution(net, workers=4)
    assert single == pooled
    assert single.counts[9] == comb(18, 9)


def test_enumeration_cap_is_enforced():
    with pytest.raises(ResourceLimitError) as exc:
        brute_force_distribution(make_builtin("identity", 5), cap=4)
    assert exc.value.requested == 5 and exc.value.limit == 4


def test_exact_distribution_invariants():
    dist = ExactDistribution(counts=(1, 3, 3, 1), log2_denominator=3)
    assert [str(p) for p in dist.as_fractions()] == ["1/8", "3/8", "3/8", "1/8"]
    assert np.allclose(dist.probabilities(), [0.125, 0.375, 0.375, 0.125])
    with pytest.raises(ValueError):
        ExactDistribution(counts=(1, 2), log2_denominator=1)
    with pytest.raises(ValueError):
        ExactDistribution(counts=(3, -1), log2_denominator=1)


def test_network_rejects_forward_references():
    with pytest.raises(ValueError):
        GateNetwork(
            num_inputs=1,
            num_outputs=1,
            gates=(NetworkGate(wire_id=1, op="NOT", sources=(1,)),),
            output_map=(1,),
        )
    with pytest.raises(ValueError):
        GateNetwork(num_inputs=1, num_outputs=1, output_map=(3,))


def test_make_builtin_shapes():
    assert make_builtin("identity", 5).num_outputs == 5
    assert make_builtin("popcount", 3).num_outputs == 2
    assert make_builtin("constant", 2, 2, 3).num_outputs == 2
    with pytest.raises(ValueError):
        make_builtin("constant", 2, 2, 4)
    with pytest.raises(ValueError):
        make_builtin("majority", 3)


def test_parse_builtin_strings():
    assert parse_builtin("popcount:3") == make_builtin("popcount", 3)
    assert parse_builtin("constant:2,2,3") == make_builtin("constant", 2, 2, 3)
    with pytest.raises(ValueError):
        parse_builtin("popcount:x")
    with pytest.raises(ValueError):
        parse_builtin("identity")


def test_random_network_respects_bounds():
    rng = np.random.default_rng(3)
    for _ in range(50):
        net = random_network(rng, max_width=12)
        assert 1 <= net.num_inputs <= 10
        assert 1 <= net.num_outputs <= 4
        assert net.num_inputs + net.num_outputs + len(net.gates) <= 12
    for _ in range(20):
        assert len(random_network(rng).gates) <= 64


@pytest.mark.parametrize("width", [2, 3, 4])
def test_random_network_fits_narrow_widths(width):
    rng = np.random.default_rng(11)
    for _ in range(40):
        net = random_network(rng, max_width=width)
        assert net.num_inputs >= 1 and net.num_outputs >= 1
        assert net.num_inputs + net.num_outputs + len(net.gates) <= width


def test_random_network_rejects_width_below_two():
    with pytest.raises(ValueError):
        random_network(np.random.default_rng(0), max_width=1)

from fractions import Fraction as F

import pytest

from fuzzcode.catalog import code_d, code_e
from fuzzcode.gf import GF2, weight
from fuzzcode.oracle import brute_coset_leaders, brute_space, brute_span
from fuzzcode.simulate import run_trial, simulate

HALF = F(1, 2)


def test_noiseless_channel():
    rep = simulate(code_d(), HALF, 0.0, 200, 5)
    assert rep.success_rate == 1.0
    assert rep.decoded == 0 and rep.undetected == 0 and rep.average_error_weight == 0


def test_determinism():
    a = simulate(code_d(), HALF, 0.1, 1000, 42).text()
    b = simulate(code_d(), HALF, 0.1, 1000, 42).text()
    assert a == b
    assert a != simulate(code_d(), HALF, 0.1, 1000, 43).text()


def test_trial_order_independence():
    full = simulate(code_e(), F(4, 7), 0.1, 40, 9)
    head = simulate(code_e(), F(4, 7), 0.1, 20, 9)
    assert head.successes <= full.successes
    assert head.error_weight_sum <= full.error_weight_sum


def test_report_field_order():
    keys = [line.split(":")[0] for line in simulate(code_d(), HALF, 0.05, 10, 1).text().splitlines()]
    assert keys == [
        "length", "alpha1", "channel_p", "seed", "trials", "frame_success_rate",
        "membership_correction_rate", "average_error_weight", "decoded", "undetected",
        "unreliable", "outside_chain",
    ]


def test_single_bit_errors_against_table():
    D = code_d()
    C1 = brute_span(D.cut(HALF).basis.rows, GF2, 8)
    for x in sorted(C1)[:4]:
        for j in range(8):
            e = tuple(int(i == j) for i in range(8))
            level = D(e)
            ambient = brute_span(D.cut(level).basis.rows, GF2, 8) if level else set(brute_space(GF2, 8))
            leaders = {l for l, _, _ in brute_coset_leaders(C1, ambient, GF2)}
            res = run_trial(D, HALF, x, e)
            assert res.decoder_used
            assert (res.outcome == "corrected") == (e in leaders)
            assert res.outside_chain == (level == 0)
    # the extended Hamming code corrects every single error
    rep_errors = [run_trial(D, HALF, (0,) * 8, tuple(int(i == j) for i in range(8))).outcome for j in range(8)]
    assert rep_errors == ["corrected"] * 8


def test_undetected_is_counted():
    D = code_d()
    x = (0,) * 8
    e = D.cut(HALF).basis.rows[0]
    res = run_trial(D, HALF, x, e)
    assert res.outcome == "undetected" and not res.decoder_used
    assert weight(e) == 4


def test_invalid_arguments():
    with pytest.raises(ValueError):
        simulate(code_d(), HALF, 1.0, 10, 0)
    with pytest.raises(ValueError):
        simulate(code_d(), HALF, -0.1, 10, 0)
    with pytest.raises(ValueError):
        simulate(code_d(), HALF, 0.1, 0, 0)

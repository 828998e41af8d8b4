import hashlib
from fractions import Fraction
from math import comb

import pytest

from fuzzcode import zoo
from fuzzcode.duality import is_fuzzy_self_dual, is_fuzzy_self_orthogonal
from fuzzcode.oracle import brute_min_distance, brute_span
from fuzzcode.zoo import (
    ext_hamming_8_4,
    fuzzy_reed_muller,
    golay_24_12,
    hamming_7_4,
    reed_muller,
    rm_dimension,
    rm_properties,
    simplex_7_3,
)

PINNED = {
    "HAMMING_ROWS": "a9437933a2ab3ed8",
    "HAMMING_H3_ROWS": "1780499a2005f1f1",
    "EXT_HAMMING_ROWS": "e7f34ae3ed2c6cda",
    "SIMPLEX_ROWS": "1780499a2005f1f1",
    "GOLAY_ROWS": "1ea913abb9a3ca35",
}


@pytest.mark.parametrize("name", sorted(PINNED))
def test_verbatim_matrix_checksums(name):
    rows = getattr(zoo, name)
    text = "\n".join("".join(map(str, r)) for r in rows)
    assert hashlib.sha256(text.encode()).hexdigest()[:16] == PINNED[name]


def test_hamming_h3_is_parity_check():
    H = hamming_7_4()
    for h in zoo.HAMMING_H3_ROWS:
        assert all(sum(a * b for a, b in zip(h, g)) % 2 == 0 for g in H.basis.rows)
    cols = [sum(zoo.HAMMING_H3_ROWS[i][j] << (2 - i) for i in range(3)) for j in range(7)]
    assert cols == list(range(1, 8))


def test_named_summaries():
    s = hamming_7_4().summary()
    assert (s.n, s.k, s.d, s.t) == (7, 4, 3, 1)
    assert ext_hamming_8_4().summary().line() == "8 4 4 self-dual"
    assert simplex_7_3().summary().line() == "7 3 4 self-orthogonal"
    assert simplex_7_3().dual() == hamming_7_4()


def test_golay():
    G = golay_24_12()
    assert G.summary().line() == "24 12 8 self-dual"
    assert all(sum(w) % 4 == 0 for w in G.codewords())
    assert len(brute_span(G.basis.rows, G.field, 24)) == 4096


def test_rm_base_cases():
    for m in range(5):
        R0 = reed_muller(0, m)
        assert R0.k == 1 and R0.basis.rows[0] == (1,) * (1 << m)
        assert reed_muller(m, m).k == 1 << m


def test_rm_dimension_formula_up_to_ten():
    for m in range(11):
        for r in range(m + 1):
            assert len(zoo.rm_generator_rows(r, m)) == rm_dimension(r, m) == sum(comb(m, i) for i in range(r + 1))
    for m in range(7):
        for r in range(m + 1):
            assert reed_muller(r, m).k == rm_dimension(r, m)


def test_rm_small_cases():
    C = reed_muller(1, 3)
    assert (C.k, brute_min_distance(C.codewords())) == (4, 4)
    R = reed_muller(2, 5)
    assert (R.n, R.k) == (32, 16) and R.is_self_dual()
    assert R.min_distance() == 8


@pytest.mark.parametrize("m", range(7))
def test_rm_properties(m):
    report = rm_properties(m)
    assert all(v in (True, None) for v in report.values()), report
    assert report["min_weight"] is True


def test_rm_range_errors():
    with pytest.raises(ValueError):
        reed_muller(3, 2)
    with pytest.raises(ValueError):
        reed_muller(0, 11)


def test_fuzzy_rm_five_levels():
    A = fuzzy_reed_muller(5)
    F = Fraction
    assert A.image() == [1, F(31, 32), F(26, 32), F(1, 2), F(6, 32), F(1, 32), 0]
    for r, a in enumerate([F(31, 32), F(26, 32), F(1, 2), F(6, 32), F(1, 32)]):
        assert A.cut(a) == reed_muller(r, 5)
    assert is_fuzzy_self_dual(A)


@pytest.mark.parametrize("m, self_dual", [(2, False), (3, True), (4, False), (5, True)])
def test_fuzzy_rm_duality(m, self_dual):
    A = fuzzy_reed_muller(m)
    assert is_fuzzy_self_orthogonal(A)
    assert is_fuzzy_self_dual(A) == self_dual
    for a in A.image():
        assert A.cut(a).dual() == A.cut(1 - a)


def test_fuzzy_rm_custom_alphas():
    A = fuzzy_reed_muller(4, ["9/10", "3/5"])
    assert A.image() == [1, Fraction(9, 10), Fraction(3, 5), Fraction(2, 5), Fraction(1, 10), 0]
    assert is_fuzzy_self_orthogonal(A)
    for bad in (["1/2", "3/5"], ["3/5", "9/10"], ["9/10"], ["1", "3/5"]):
        with pytest.raises(ValueError):
            fuzzy_reed_muller(4, bad)

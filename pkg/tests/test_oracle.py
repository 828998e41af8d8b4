import random

import pytest

from fuzzcode import oracle
from fuzzcode.catalog import ext_sum_pair
from fuzzcode.errors import TooLarge
from fuzzcode.gf import GF2, Field
from fuzzcode.zoo import GOLAY_ROWS, golay_24_12, hamming_7_4, simplex_7_3


def test_span_examples():
    assert len(oracle.brute_span([(1, 1, 0), (0, 1, 1)], GF2, 3)) == 4
    assert oracle.brute_span([], GF2, 3) == {(0, 0, 0)}
    assert len(oracle.brute_span(GOLAY_ROWS, GF2, 24)) == 4096


def test_dual_examples():
    simplex = oracle.brute_span(simplex_7_3().basis.rows, GF2, 7)
    hamming = oracle.brute_span(hamming_7_4().basis.rows, GF2, 7)
    assert oracle.brute_dual(simplex, GF2, 7) == hamming
    assert len(hamming) == 16
    full = oracle.brute_space(GF2, 3)
    assert oracle.brute_dual(full, GF2, 3) == {(0, 0, 0)}


def test_distance_membership_sum_nearest():
    assert oracle.brute_min_distance(hamming_7_4().codewords()) == 3
    A, B = ext_sum_pair()
    assert oracle.brute_ext_sum(A, B, (0, 0, 0)) == 1
    assert oracle.brute_nearest(hamming_7_4().codewords(), (1, 1, 0, 0, 0, 1, 1)) == [(1, 0, 0, 0, 0, 1, 1)]


def test_caps():
    with pytest.raises(TooLarge):
        oracle.brute_space(GF2, 21)
    with pytest.raises(TooLarge):
        oracle.brute_span(golay_24_12().basis.rows, GF2, 24, cap=1000)


def test_is_subspace():
    f = Field(3)
    assert oracle.brute_is_subspace(oracle.brute_span([(1, 2)], f, 2), f)
    assert not oracle.brute_is_subspace({(0, 0), (1, 2)}, f)
    assert not oracle.brute_is_subspace(set(), f)


def test_oracle_shares_no_fast_paths():
    import ast
    import inspect

    tree = ast.parse(inspect.getsource(oracle))
    imported = {
        node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom) and node.module
    }
    assert imported <= {"__future__", "itertools", "fractions", "typing", "errors", "gf"}
    gf_names = {
        a.name for node in ast.walk(tree)
        if isinstance(node, ast.ImportFrom) and node.module == "gf" for a in node.names
    }
    assert gf_names <= {"Field", "Vector", "add", "enumeration_cap", "inner_product", "scale", "sub", "weight"}


def test_coset_leaders_partition():
    rng = random.Random(3)
    f = Field(3)
    rows = [tuple(rng.randrange(3) for _ in range(4)) for _ in range(3)]
    ambient = oracle.brute_span(rows, f, 4)
    base = oracle.brute_span(rows[:1], f, 4)
    leaders = oracle.brute_coset_leaders(base, ambient, f)
    assert len(leaders) * len(base) == len(ambient)

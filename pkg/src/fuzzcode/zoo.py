"""Named binary codes: Hamming, extended Hamming, simplex, Golay, Reed-Muller.

The fixed generator matrices below are stored exactly as published; the
test suite pins their checksums.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .code import LinearCode
from .errors import TooLarge
from .fuzzy import FuzzyLinearCode, LevelLike, as_level
from .gf import GF2, FieldMatrix

MAX_RM_M = 10

# [I_4 | R]
HAMMING_ROWS = (
    (1, 0, 0, 0, 0, 1, 1),
    (0, 1, 0, 0, 1, 0, 1),
    (0, 0, 1, 0, 1, 1, 0),
    (0, 0, 0, 1, 1, 1, 1),
)

# parity check whose i-th column is i in binary
HAMMING_H3_ROWS = (
    (0, 0, 0, 1, 1, 1, 1),
    (0, 1, 1, 0, 0, 1, 1),
    (1, 0, 1, 0, 1, 0, 1),
)

EXT_HAMMING_ROWS = (
    (1, 0, 0, 0, 0, 1, 1, 1),
    (0, 1, 0, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 1, 1, 0, 1),
    (0, 0, 0, 1, 1, 1, 1, 0),
)

SIMPLEX_ROWS = (
    (0, 0, 0, 1, 1, 1, 1),
    (0, 1, 1, 0, 0, 1, 1),
    (1, 0, 1, 0, 1, 0, 1),
)

GOLAY_R12 = (
    "011111111111",
    "111011100010",
    "110111000101",
    "101110001011",
    "111100010110",
    "111000101101",
    "110001011011",
    "100010110111",
    "100101101110",
    "101011011100",
    "110110111000",
    "101101110001",
)


def _golay_rows() -> tuple[tuple[int, ...], ...]:
    rows = []
    for i, r in enumerate(GOLAY_R12):
        ident = tuple(int(i == j) for j in range(12))
        rows.append(ident + tuple(int(c) for c in r))
    return tuple(rows)


GOLAY_ROWS = _golay_rows()


def hamming_7_4() -> LinearCode:
    return LinearCode.from_rows(GF2, 7, HAMMING_ROWS)


def ext_hamming_8_4() -> LinearCode:
    return LinearCode.from_rows(GF2, 8, EXT_HAMMING_ROWS)


def simplex_7_3() -> LinearCode:
    return LinearCode.from_rows(GF2, 7, SIMPLEX_ROWS)


def golay_24_12() -> LinearCode:
    return LinearCode.from_rows(GF2, 24, GOLAY_ROWS)


@lru_cache(maxsize=None)
def rm_generator_rows(r: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Rows of the recursive generator ``G(r, m)`` (Plotkin ``(u | u + v)`` layout)."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    n = 1 << m
    if r == 0:
        return ((1,) * n,)
    if r == m:
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    top = tuple(row + row for row in rm_generator_rows(r, m - 1))
    half = (0,) * (n // 2)
    bottom = tuple(half + row for row in rm_generator_rows(r - 1, m - 1))
    return top + bottom


def rm_generator(r: int, m: int) -> FieldMatrix:
    return FieldMatrix(GF2, rm_generator_rows(r, m), 1 << m)


def rm_dimension(r: int, m: int) -> int:
    return sum(comb(m, i) for i in range(r + 1))


def reed_muller(r: int, m: int) -> LinearCode:
    """The binary Reed-Muller code R(r, m) of length ``2^m``."""
    if not 0 <= m <= MAX_RM_M:
        raise ValueError(f"m must lie in [0, {MAX_RM_M}], got {m}")
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    return LinearCode.from_rows(GF2, 1 << m, rm_generator_rows(r, m))


def rm_properties(m: int, cap: int = 1 << 16) -> dict[str, bool | None]:
    """Check nesting, dimension, duality and minimum weight of ``R(., m)``.

    Minimum weights are enumerated only when ``2^k <= cap``; a property whose
    every instance was skipped reports ``None``.
    """
    codes = [reed_muller(r, m) for r in range(m + 1)]
    nesting = all(codes[i].is_subcode(codes[j]) for i in range(m + 1) for j in range(i, m + 1))
    dimension = all(codes[r].k == rm_dimension(r, m) for r in range(m + 1))
    duality = codes[m].dual().k == 0 and all(codes[r].dual() == codes[m - r - 1] for r in range(m))
    checked = []
    for r, c in enumerate(codes):
        try:
            checked.append(c.min_distance(cap) == 1 << (m - r))
        except TooLarge:
            pass
    return {
        "nesting": nesting,
        "dimension": dimension,
        "duality": duality,
        "min_weight": all(checked) if checked else None,
    }


def default_rm_alphas(m: int) -> list[Fraction]:
    return [1 - Fraction(rm_dimension(r, m), 1 << m) for r in range(_rm_low_count(m))]


def _rm_low_count(m: int) -> int:
    return (m - 1) // 2 if m % 2 else m // 2


def fuzzy_reed_muller(m: int, alphas: Sequence[LevelLike] | None = None) -> FuzzyLinearCode:
    """Fuzzy code whose cuts are the Reed-Muller codes of length ``2^m``.

    Chain ``{0} < R(0,m) < ... < R(m-1,m) < V`` with ``R(r,m)`` at
    ``alphas[r]`` and ``R(m-r-1,m)`` at ``1 - alphas[r]`` for the low half.
    For odd ``m`` the self-dual ``R((m-1)/2, m)`` sits at 1/2; even ``m``
    has no 1/2 level.  Defaults to ``alpha_r = 1 - dim R(r,m) / 2^m``.
    """
    if m < 2:
        raise ValueError(f"fuzzy Reed-Muller codes need m >= 2, got {m}")
    low = _rm_low_count(m)
    if alphas is None:
        alphas = default_rm_alphas(m)
    alphas = [as_level(a) for a in alphas]
    if len(alphas) != low:
        raise ValueError(f"m={m} needs {low} alphas, got {len(alphas)}")
    if any(not Fraction(1, 2) < a < 1 for a in alphas):
        raise ValueError("alphas must lie strictly between 1/2 and 1")
    if any(b >= a for a, b in zip(alphas, alphas[1:])):
        raise ValueError("alphas must be strictly decreasing")

    n = 1 << m
    chain = [(Fraction(1), LinearCode.zero(GF2, n))]
    for r, a in enumerate(alphas):
        chain.append((a, rm_generator_rows(r, m)))
        chain.append((1 - a, reed_muller(m - r - 1, m)))
    if m % 2:
        chain.append((Fraction(1, 2), rm_generator_rows((m - 1) // 2, m)))
    return FuzzyLinearCode.from_chain(GF2, n, chain)

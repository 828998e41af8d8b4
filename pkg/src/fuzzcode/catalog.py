"""Small named fuzzy codes used as worked examples and shipped data."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from typing import Callable

from .code import LinearCode
from .fileio import loads
from .duality import HALF, dimension_parameterized, embed_self_orthogonal, fuzzy_simplex_hamming
from .fuzzy import FuzzyLinearCode, LevelMap
from .gf import GF2
from .zoo import ext_hamming_8_4, golay_24_12, simplex_7_3


def v3_example() -> FuzzyLinearCode:
    """GF(2)^3: 1 on {0}, 1/2 on the even-weight code, 1/3 elsewhere."""
    return FuzzyLinearCode.from_chain(
        GF2, 3, [(1, []), (HALF, [(1, 1, 0), (0, 1, 1)]), (Fraction(1, 3), LinearCode.full(GF2, 3))]
    )


def v4_example() -> FuzzyLinearCode:
    """GF(2)^4: 1 on {0}, 1/2 on <1010, 0101>, 0 elsewhere."""
    return FuzzyLinearCode.from_chain(GF2, 4, [(1, []), (HALF, [(1, 0, 1, 0), (0, 1, 0, 1)])])


def code_b() -> FuzzyLinearCode:
    """1 on {0}, 1/2 on the extended Hamming code, 0 elsewhere."""
    return FuzzyLinearCode.from_chain(GF2, 8, [(1, []), (HALF, ext_hamming_8_4())])


def code_d() -> FuzzyLinearCode:
    """Dimension-parameterized fuzzy self-dual extended Hamming code."""
    return dimension_parameterized(ext_hamming_8_4())


def code_e() -> FuzzyLinearCode:
    return fuzzy_simplex_hamming()


def code_f() -> FuzzyLinearCode:
    """Simplex code embedded as ``{0} < S < S^perp < V`` at 1, 4/7, 3/7, 0."""
    return embed_self_orthogonal(simplex_7_3())


def fuzzy_golay() -> FuzzyLinearCode:
    return dimension_parameterized(golay_24_12())


def union_pair() -> tuple[FuzzyLinearCode, FuzzyLinearCode]:
    """Crisp ``<(1,0)>`` and ``<(0,1)>`` in GF(2)^2; their union is not linear."""
    return (
        FuzzyLinearCode.from_chain(GF2, 2, [(1, [(1, 0)])]),
        FuzzyLinearCode.from_chain(GF2, 2, [(1, [(0, 1)])]),
    )


def ext_sum_pair() -> tuple[FuzzyLinearCode, FuzzyLinearCode]:
    """The V3 example and the crisp repetition code ``{000, 111}``."""
    return v3_example(), FuzzyLinearCode.from_chain(GF2, 3, [(1, [(1, 1, 1)])])


def ext_sum_table() -> LevelMap:
    """1 on {000, 111}, 1/2 on weight two, 1/3 on weight one.

    This is the pointwise maximum of :func:`ext_sum_pair`; its 1/2 cut is
    not closed under addition.
    """
    table = {(0, 0, 0): 1, (1, 1, 1): 1}
    for x in [(1, 1, 0), (1, 0, 1), (0, 1, 1)]:
        table[x] = HALF
    return LevelMap.from_table(GF2, 3, table, Fraction(1, 3))


FUZZY_CATALOG: dict[str, Callable[[], FuzzyLinearCode]] = {
    "v3": v3_example,
    "v4": v4_example,
    "code-b": code_b,
    "code-d": code_d,
    "code-e": code_e,
    "code-f": code_f,
    "fuzzy-golay": fuzzy_golay,
}


def shipped_names() -> list[str]:
    """Names of the code files bundled under ``fuzzcode/data``."""
    root = resources.files("fuzzcode") / "data"
    return sorted(p.name.rsplit(".", 1)[0] for p in root.iterdir() if p.name.endswith(".txt"))


def load_shipped(name: str):
    """Read a bundled LINEARCODE or FUZZYCODE file by name (e.g. ``"code-d"``)."""
    return loads((resources.files("fuzzcode") / "data" / f"{name}.txt").read_text())

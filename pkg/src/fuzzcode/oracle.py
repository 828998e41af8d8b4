"""Naive reference implementations.

Everything here is a definitional loop over explicit vector sets.  The only
shared code with the rest of the package is elementwise field arithmetic,
so these functions can vouch for the fast paths.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import TooLarge
from .gf import Field, Vector, add, enumeration_cap, inner_product, scale, sub, weight

ORACLE_CAP = 1 << 20


def _cap(cap: int | None) -> int:
    return min(ORACLE_CAP, enumeration_cap()) if cap is None else cap


def brute_space(field: Field, n: int, cap: int | None = None) -> list[Vector]:
    """All of GF(p)^n in lexicographic order."""
    cap = _cap(cap)
    if field.p**n > cap:
        raise TooLarge(f"GF({field.p})^{n}", field.p**n, cap)
    return [tuple(v) for v in itertools.product(range(field.p), repeat=n)]


def brute_span(rows: Sequence[Sequence[int]], field: Field, n: int, cap: int | None = None) -> set[Vector]:
    """Every linear combination of ``rows`` (``q^len(rows)`` of them)."""
    cap = _cap(cap)
    rows = [tuple(r) for r in rows]
    if field.p ** len(rows) > cap:
        raise TooLarge("span", field.p ** len(rows), cap)
    out = set()
    for coeffs in itertools.product(range(field.p), repeat=len(rows)):
        v = (0,) * n
        for c, r in zip(coeffs, rows):
            v = add(v, scale(c, r, field), field)
        out.add(v)
    return out


def brute_dual(codewords: Iterable[Vector], field: Field, n: int, cap: int | None = None) -> set[Vector]:
    """Vectors orthogonal to every given codeword, by scanning the space."""
    words = list(codewords)
    return {x for x in brute_space(field, n, cap) if all(inner_product(x, c, field) == 0 for c in words)}


def brute_kernel(rows: Sequence[Sequence[int]], field: Field, n: int, cap: int | None = None) -> set[Vector]:
    """``{x : H x^T = 0}``."""
    return brute_dual(rows, field, n, cap)


def brute_is_subspace(vectors: set[Vector], field: Field) -> bool:
    if not vectors:
        return False
    return all(add(x, y, field) in vectors for x in vectors for y in vectors) and all(
        scale(c, x, field) in vectors for x in vectors for c in range(field.p)
    )


def brute_min_distance(codewords: Iterable[Vector]) -> int | None:
    """Least pairwise Hamming distance; ``None`` for fewer than two codewords."""
    words = list(codewords)
    best = None
    for x, y in itertools.combinations(words, 2):
        d = sum(a != b for a, b in zip(x, y))
        if best is None or d < best:
            best = d
    return best


def brute_chain(A) -> list[tuple[Fraction, set[Vector]]]:
    """``(alpha_i, C_i)`` as explicit sets from the master rows of a fuzzy code."""
    return [(a, brute_span(A.master_rows[:k], A.field, A.n)) for a, k in A.levels]


def brute_membership(A, x: Sequence[int]) -> Fraction:
    """``max{alpha : x in A_alpha}`` read straight off the explicit chain."""
    x = tuple(x)
    best = Fraction(0)
    for a, s in brute_chain(A):
        if x in s and a > best:
            best = a
    return best


def brute_level_map(A, cap: int | None = None) -> dict[Vector, Fraction]:
    chain = brute_chain(A)
    out = {}
    for x in brute_space(A.field, A.n, cap):
        out[x] = max([a for a, s in chain if x in s], default=Fraction(0))
    return out


def brute_axioms(values: dict[Vector, Fraction], field: Field) -> bool:
    """Pointwise fuzzy-subspace axioms over an explicit table."""
    for x in values:
        for y in values:
            if values[add(x, y, field)] < min(values[x], values[y]):
                return False
        for c in range(field.p):
            if values[scale(c, x, field)] < values[x]:
                return False
    return True


def brute_ext_sum(A, B, z: Sequence[int]) -> Fraction:
    """``max over x + y = z of min(A(x), B(y))`` over all ``q^n`` splits."""
    z = tuple(z)
    la, lb = brute_level_map(A), brute_level_map(B)
    return max(min(la[x], lb[sub(z, x, A.field)]) for x in la)


def brute_nearest(codewords: Iterable[Vector], y: Sequence[int]) -> list[Vector]:
    """All codewords at minimum Hamming distance from ``y``, sorted."""
    y = tuple(y)
    words = list(codewords)
    dist = [sum(a != b for a, b in zip(c, y)) for c in words]
    best = min(dist)
    return sorted(c for c, d in zip(words, dist) if d == best)


def brute_coset_leaders(base: set[Vector], ambient: set[Vector], field: Field) -> list[tuple[Vector, int, int]]:
    """For each coset of ``base`` in ``ambient``: (lex-least min-weight element, weight, ties)."""
    seen: set[Vector] = set()
    out = []
    for v in sorted(ambient):
        if v in seen:
            continue
        coset = {add(v, c, field) for c in base}
        seen |= coset
        w = min(weight(e) for e in coset)
        tied = sorted(e for e in coset if weight(e) == w)
        out.append((tied[0], w, len(tied)))
    return out

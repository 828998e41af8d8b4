"""Syndrome decoding for fuzzy linear codes.

A word received below the sending level ``alpha1`` lies in the larger cut
``C2 = A_{A(y)}``, so only the ``q^(k2-k1)`` cosets of ``C1 = A_{alpha1}``
inside ``C2`` need a table entry.  Leaders are minimum-weight coset
elements, ties broken by the lexicographically smallest residue sequence.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .code import LinearCode, iter_span
from .errors import EmptyCut, FieldError, MembershipZeroOutsideChain, NotNested, TooLarge
from .fuzzy import FuzzyLinearCode, LevelLike, as_level, format_level
from .gf import Field, Vector, enumeration_cap, format_vector, sub, weight


@dataclass(frozen=True)
class SyndromeTable:
    """Syndrome -> coset leader for the cosets of ``base`` inside ``ambient``."""

    base: LinearCode
    ambient: LinearCode
    entries: dict[Vector, Vector] = field(repr=False)
    unique: dict[Vector, bool] = field(repr=False)
    alpha1: Fraction | None = None
    alpha2: Fraction | None = None

    @property
    def field(self) -> Field:
        return self.base.field

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def full_table_size(self) -> int:
        """Entries in a classical table for ``base``: ``q^(n-k1)``."""
        return self.base.q ** (self.base.n - self.base.k)

    @property
    def reduction_ratio(self) -> Fraction:
        return Fraction(self.full_table_size, len(self.entries))

    def dump_lines(self) -> list[str]:
        """One line per entry: ``syndrome leader weight unique``."""
        f = self.field
        out = []
        for s in sorted(self.entries):
            e = self.entries[s]
            out.append(f"{format_vector(s, f)} {format_vector(e, f)} {weight(e)} {int(self.unique[s])}")
        return out


@dataclass(frozen=True)
class DecodeResult:
    codeword: Vector
    corrected_membership: Fraction | None
    error_vector: Vector
    reliable: bool
    received_membership: Fraction | None = None
    syndrome: Vector | None = None
    outside_chain: bool = False
    table: SyndromeTable | None = field(default=None, repr=False, compare=False)

    @property
    def corrected(self) -> bool:
        return any(self.error_vector)


def _extension_rows(base: LinearCode, ambient: LinearCode, preferred=()) -> list[Vector]:
    """Rows completing a basis of ``base`` to one of ``ambient``, preferring ``preferred``."""
    rows = list(base.basis.rows)
    span = base
    ext = []
    for g in itertools.chain(preferred, ambient.basis.rows):
        if len(ext) == ambient.k - base.k:
            break
        if ambient.contains(g) and not span.contains(g):
            ext.append(tuple(g))
            rows.append(tuple(g))
            span = LinearCode.from_rows(base.field, base.n, rows)
    return ext


def _dtype(p: int):
    return np.uint8 if p <= 128 else np.int64


def coset_table(base: LinearCode, ambient: LinearCode, extension=(), cap: int | None = None):
    """Leaders of every coset of ``base`` in ``ambient``.

    Returns ``(entries, unique)`` keyed by syndrome with respect to
    ``base.parity``.  Each coset is searched over all ``q^k1`` translates.
    """
    if base.field != ambient.field or base.n != ambient.n:
        raise FieldError("base and ambient codes live in different spaces")
    if not base.is_subcode(ambient) or base.k == ambient.k:
        raise NotNested(f"[{base.n},{base.k}] is not a proper subcode of [{ambient.n},{ambient.k}]")
    cap = enumeration_cap() if cap is None else cap
    p, n = base.q, base.n
    if p**ambient.k > cap:
        raise TooLarge("coset leader search", p**ambient.k, cap)

    dt = _dtype(p)
    words = np.array(list(iter_span(base.basis.rows, base.field, n)), dtype=dt).reshape(-1, n)
    ext = _extension_rows(base, ambient, extension)
    entries: dict[Vector, Vector] = {}
    unique: dict[Vector, bool] = {}
    for rep in iter_span(ext, base.field, n):
        coset = (words + np.array(rep, dtype=dt)) % p if p > 2 else words ^ np.array(rep, dtype=dt)
        wts = np.count_nonzero(coset, axis=1)
        best = wts.min()
        cand = coset[wts == best]
        lead = cand[np.lexsort(cand.T[::-1])[0]]
        e = tuple(int(a) for a in lead)
        s = base.syndrome(e)
        entries[s] = e
        unique[s] = len(cand) == 1
    return entries, unique


@lru_cache(maxsize=128)
def _cached_table(A: FuzzyLinearCode, alpha1: Fraction, alpha2: Fraction, cap: int) -> SyndromeTable:
    C1 = A.cut(alpha1)
    C2 = A.cut(alpha2)
    if C1 is None:
        raise EmptyCut(f"cut at {format_level(alpha1)} is empty (top level is {format_level(A.alphas[0]) if A.alphas else 'none'})")
    if C2 is None:
        raise EmptyCut(f"cut at {format_level(alpha2)} is empty")
    if not alpha2 < alpha1 or C1 == C2:
        raise NotNested(f"cut at {format_level(alpha1)} is not a proper subcode of cut at {format_level(alpha2)}")
    entries, unique = coset_table(C1, C2, A.master_rows[C1.k:], cap)
    return SyndromeTable(C1, C2, entries, unique, alpha1, alpha2)


def build_table(A: FuzzyLinearCode, alpha1: LevelLike, alpha2: LevelLike, cap: int | None = None) -> SyndromeTable:
    """Reduced syndrome table for the cut pair ``(A_alpha1, A_alpha2)``.

    Tables are cached per ``(A, alpha1, alpha2)``.
    """
    cap = enumeration_cap() if cap is None else cap
    return _cached_table(A, as_level(alpha1), as_level(alpha2), cap)


def decode(A: FuzzyLinearCode, alpha1: LevelLike, y, cap: int | None = None) -> DecodeResult:
    """Correct a received word for a sender that only emits words of level ``>= alpha1``.

    A word already at level ``alpha1`` or above is returned unchanged.
    Otherwise the table for ``(alpha1, A(y))`` supplies the coset leader
    ``e`` and the result is ``y - e``.  When the true error is not a coset
    leader this miscorrects; ``reliable`` is False when the leader was tied.
    """
    alpha1 = as_level(alpha1)
    y = A.field.vector(y)
    if len(y) != A.n:
        raise FieldError(f"received word of length {len(y)}, code length is {A.n}")
    C1 = A.cut(alpha1)
    if C1 is None or alpha1 == 0:
        raise EmptyCut(f"cannot decode to the cut at {format_level(alpha1)}")
    ay = A.membership(y)
    zero = A.field.zero(A.n)
    if ay >= alpha1:
        return DecodeResult(y, ay, zero, True, ay, C1.syndrome(y))
    outside = ay == 0
    if outside:
        warnings.warn(
            "received word lies outside every stored cut; searching cosets in the full space",
            MembershipZeroOutsideChain,
            stacklevel=2,
        )
    table = build_table(A, alpha1, ay, cap)
    s = C1.syndrome(y)
    e = table.entries[s]
    x = sub(y, e, A.field)
    return DecodeResult(x, A.membership(x), e, table.unique[s], ay, s, outside, table)


# -- classical decoding -----------------------------------------------------------

def _vectors_of_weight(n: int, w: int, p: int):
    out = []
    for pos in itertools.combinations(range(n), w):
        for vals in itertools.product(range(1, p), repeat=w):
            v = [0] * n
            for j, a in zip(pos, vals):
                v[j] = a
            out.append(tuple(v))
    out.sort()
    return out


@lru_cache(maxsize=32)
def _classic_table(C: LinearCode, cap: int):
    size = C.q ** (C.n - C.k)
    if size > cap:
        raise TooLarge("standard array", size, cap)
    entries: dict[Vector, Vector] = {}
    unique: dict[Vector, bool] = {}
    for w in range(C.n + 1):
        fresh = set()
        for e in _vectors_of_weight(C.n, w, C.q):
            s = C.syndrome(e)
            if s not in entries:
                entries[s] = e
                unique[s] = True
                fresh.add(s)
            elif s in fresh:
                unique[s] = False
        if len(entries) == size:
            break
    return entries, unique


def classic_table(C: LinearCode, cap: int | None = None) -> SyndromeTable:
    """Full coset-leader table of ``C``, ``q^(n-k)`` entries."""
    cap = enumeration_cap() if cap is None else cap
    entries, unique = _classic_table(C, cap)
    return SyndromeTable(C, LinearCode.full(C.field, C.n), entries, unique)


def classic_decode(C: LinearCode, y, cap: int | None = None) -> DecodeResult:
    """Nearest-codeword decoding through the full standard-array table."""
    y = C.field.vector(y)
    table = classic_table(C, cap)
    s = C.syndrome(y)
    e = table.entries[s]
    return DecodeResult(sub(y, e, C.field), None, e, table.unique[s], None, s, False, table)

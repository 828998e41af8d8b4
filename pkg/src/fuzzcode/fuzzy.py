"""Fuzzy linear codes as nested chains of linear codes.

A fuzzy linear code stores master rows ``g_1 .. g_K`` and levels
``(alpha_i, k_i)``; the upper cut at ``alpha_i`` is the span of the first
``k_i`` rows.  Membership values are :class:`fractions.Fraction` in
``[0, 1]``.  A vector outside every stored cut has membership 0, and the
cut at 0 is the whole space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

from .code import LinearCode
from .errors import FieldError, InvariantError, NotFuzzyLinear, TooLarge
from .gf import Field, FieldMatrix, Vector, add, enumeration_cap, rank, scale

LevelLike = Union[Fraction, int, str]
ChainEntry = tuple[LevelLike, Union[LinearCode, Sequence[Sequence[int]]]]


def as_level(value: LevelLike) -> Fraction:
    """Coerce to an exact membership value and check it lies in [0, 1]."""
    if isinstance(value, float):
        raise TypeError("membership values must be exact; pass a Fraction or 'a/b' string")
    try:
        v = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad membership value {value!r}: {exc}") from None
    if not 0 <= v <= 1:
        raise ValueError(f"membership value {v} outside [0, 1]")
    return v


def format_level(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def all_vectors(field: Field, n: int, cap: int | None = None) -> Iterator[Vector]:
    """Every vector of GF(p)^n in lexicographic order."""
    cap = enumeration_cap() if cap is None else cap
    if field.p**n > cap:
        raise TooLarge(f"vectors of GF({field.p})^{n}", field.p**n, cap)
    return itertools.product(range(field.p), repeat=n)


@dataclass(frozen=True, eq=False)
class FuzzyLinearCode:
    """A nested chain ``C_0 < C_1 < ... < C_{m-1}`` with levels ``alpha_0 > ... > alpha_{m-1} > 0``."""

    field: Field
    n: int
    master_rows: tuple[Vector, ...]
    levels: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        rows = tuple(self.field.vector(r) for r in self.master_rows)
        object.__setattr__(self, "master_rows", rows)
        levels = tuple((as_level(a), int(k)) for a, k in self.levels)
        object.__setattr__(self, "levels", levels)
        for r in rows:
            if len(r) != self.n:
                raise FieldError(f"master row of length {len(r)} in a length-{self.n} code")
        K = len(rows)
        if K > self.n:
            raise InvariantError("master rows must be linearly independent", f"{K} rows in length {self.n}")
        if K and rank(FieldMatrix(self.field, rows, self.n)) != K:
            raise InvariantError("master rows must be linearly independent")
        for (a0, k0), (a1, k1) in zip(levels, levels[1:]):
            if not a0 > a1:
                raise InvariantError("levels must be strictly decreasing", f"{a0} then {a1}")
            if not k0 < k1:
                raise InvariantError("dims must be strictly increasing (cuts nested and distinct)", f"{k0} then {k1}")
        if levels:
            if levels[-1][0] <= 0:
                raise InvariantError("levels must be positive", "membership 0 is implicit")
            if levels[0][1] < 0:
                raise InvariantError("dims must be non-negative")
            if levels[-1][1] != K:
                raise InvariantError("last dim must equal the number of master rows", f"{levels[-1][1]} != {K}")
        elif K:
            raise InvariantError("a chain with no levels has no master rows")

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_chain(cls, field: Field, n: int, chain: Iterable[ChainEntry]) -> "FuzzyLinearCode":
        """Build from ``(alpha, code_or_rows)`` pairs.

        Pairs are sorted by decreasing alpha.  A repeated alpha keeps the
        largest of its codes, a code equal to the one above it is dropped
        (its level is never attained), and alpha 0 entries are dropped.
        When rows are given, master rows extend in the given row order.
        """
        entries = []
        for a, c in chain:
            a = as_level(a)
            if a == 0:
                continue
            if isinstance(c, LinearCode):
                if c.field != field or c.n != n:
                    raise FieldError("chain code does not match the field/length")
                code, gens = c, list(c.basis.rows)
            else:
                gens = [field.vector(r) for r in c]
                code = LinearCode.from_rows(field, n, gens)
            entries.append((a, code, gens))
        entries.sort(key=lambda e: e[0], reverse=True)

        merged: list[tuple[Fraction, LinearCode, list]] = []
        for a, code, gens in entries:
            if merged and merged[-1][0] == a:
                prev = merged[-1]
                if prev[1].is_subcode(code):
                    merged[-1] = (a, code, prev[2] + gens)
                elif code.is_subcode(prev[1]):
                    merged[-1] = (a, prev[1], prev[2] + gens)
                else:
                    raise InvariantError("cut chain must be nested", f"two incomparable codes at level {a}")
            else:
                merged.append((a, code, gens))

        rows: list[Vector] = []
        span = LinearCode.zero(field, n)
        levels = []
        for a, code, gens in merged:
            if not span.is_subcode(code):
                raise InvariantError("cut chain must be nested", f"cut at level {a} misses an earlier cut")
            if levels and code == span:
                continue
            for g in itertools.chain(gens, code.basis.rows):
                if not span.contains(g):
                    rows.append(g)
                    span = LinearCode.from_rows(field, n, rows)
            levels.append((a, len(rows)))
        return cls(field, n, tuple(rows), tuple(levels))

    @classmethod
    def crisp(cls, code: LinearCode, alpha: LevelLike = 1) -> "FuzzyLinearCode":
        """``alpha`` on ``code`` and 0 elsewhere."""
        return cls.from_chain(code.field, code.n, [(alpha, code)])

    # -- structure ----------------------------------------------------------------

    @property
    def alphas(self) -> tuple[Fraction, ...]:
        return tuple(a for a, _ in self.levels)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.levels)

    @property
    def m(self) -> int:
        return len(self.levels)

    @cached_property
    def cuts(self) -> tuple[LinearCode, ...]:
        return tuple(LinearCode.from_rows(self.field, self.n, self.master_rows[:k]) for k in self.dims)

    @cached_property
    def _key(self):
        return (self.field.p, self.n, self.alphas, tuple(c.basis.rows for c in self.cuts))

    def __eq__(self, other):
        if not isinstance(other, FuzzyLinearCode):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self) -> str:
        lv = ", ".join(f"{format_level(a)}:{k}" for a, k in self.levels)
        return f"FuzzyLinearCode(GF({self.field.p}), n={self.n}, levels=[{lv}])"

    # -- queries ------------------------------------------------------------------

    def membership(self, x: Sequence[int]) -> Fraction:
        x = self.field.vector(x)
        if len(x) != self.n:
            raise FieldError(f"vector of length {len(x)} for a length-{self.n} code")
        for a, c in zip(self.alphas, self.cuts):
            if c.contains(x):
                return a
        return Fraction(0)

    __call__ = membership

    def cut(self, alpha: LevelLike) -> LinearCode | None:
        """Upper cut ``{x : A(x) >= alpha}``; ``None`` when it is empty."""
        alpha = as_level(alpha)
        if alpha == 0:
            return LinearCode.full(self.field, self.n)
        chosen = None
        for a, c in zip(self.alphas, self.cuts):
            if a >= alpha:
                chosen = c
            else:
                break
        return chosen

    def image(self) -> list[Fraction]:
        """Attained membership values, strictly decreasing."""
        out = list(self.alphas)
        if not self.levels or self.dims[-1] < self.n:
            out.append(Fraction(0))
        return out

    def level_set_sizes(self) -> dict[Fraction, int]:
        """Number of vectors at each attained membership value."""
        q = self.field.p
        sizes = {}
        prev = 0
        for a, k in self.levels:
            sizes[a] = q**k - prev
            prev = q**k
        if q**self.n > prev:
            sizes[Fraction(0)] = q**self.n - prev
        return sizes

    def level_map(self, cap: int | None = None) -> "LevelMap":
        values: dict[Vector, Fraction] = {}
        for a, c in zip(self.alphas, self.cuts):
            for x in c.codewords(cap):
                values.setdefault(x, a)
        zero = Fraction(0)
        for x in all_vectors(self.field, self.n, cap):
            values.setdefault(x, zero)
        return LevelMap(self.field, self.n, values)


@dataclass(frozen=True)
class LevelMap:
    """Explicit membership table over all of GF(p)^n."""

    field: Field
    n: int
    values: Mapping[Vector, Fraction] = dc_field(repr=False)

    def __post_init__(self):
        vals = {tuple(x): as_level(v) for x, v in self.values.items()}
        size = self.field.p**self.n
        if len(vals) != size:
            raise InvariantError("level map must be total", f"{len(vals)} of {size} vectors")
        for x in vals:
            if len(x) != self.n:
                raise FieldError(f"key {x} has wrong length")
            self.field.vector(x)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, field: Field, n: int, fn: Callable[[Vector], LevelLike]) -> "LevelMap":
        return cls(field, n, {x: as_level(fn(x)) for x in all_vectors(field, n)})

    @classmethod
    def from_table(cls, field: Field, n: int, table: Mapping[Sequence[int], LevelLike], default: LevelLike = 0) -> "LevelMap":
        d = as_level(default)
        given = {tuple(k): as_level(v) for k, v in table.items()}
        return cls(field, n, {x: given.get(x, d) for x in all_vectors(field, n)})

    @classmethod
    def constant(cls, field: Field, n: int, value: LevelLike) -> "LevelMap":
        v = as_level(value)
        return cls.from_function(field, n, lambda _: v)

    def __call__(self, x: Sequence[int]) -> Fraction:
        return self.values[tuple(x)]

    __getitem__ = __call__

    def vectors(self) -> list[Vector]:
        return sorted(self.values)

    def image(self) -> list[Fraction]:
        return sorted(set(self.values.values()), reverse=True)

    def upper_cut(self, alpha: LevelLike) -> set[Vector]:
        alpha = as_level(alpha)
        return {x for x, v in self.values.items() if v >= alpha}


# -- level map <-> chain ------------------------------------------------------------

def _closure_witness(cut: set[Vector], field: Field):
    """First ``x + y`` or ``lam * x`` escaping ``cut``, scanning in reverse lex order."""
    ordered = sorted(cut, reverse=True)
    for x in ordered:
        for y in ordered:
            if add(x, y, field) not in cut:
                return ("add", x, y)
    for x in ordered:
        for lam in range(field.p):
            if scale(lam, x, field) not in cut:
                return ("scale", lam, x)
    return None


def from_level_map(L: LevelMap) -> FuzzyLinearCode:
    """Recover the canonical chain; raises :class:`NotFuzzyLinear` on a non-subspace cut."""
    chain = []
    for a in L.image():
        if a == 0:
            continue
        cut = L.upper_cut(a)
        code = LinearCode.from_rows(L.field, L.n, sorted(cut))
        if code.size != len(cut):
            raise NotFuzzyLinear(a, _closure_witness(cut, L.field))
        chain.append((a, code))
    return FuzzyLinearCode.from_chain(L.field, L.n, chain)


def _index_tables(field: Field, n: int, L: LevelMap):
    """Vectors as base-p indices plus a rank-encoded value array."""
    p = field.p
    N = p**n
    digits = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64).reshape(N, n)
    ranks = {v: i for i, v in enumerate(sorted(set(L.values.values())))}
    vals = np.array([ranks[L.values[tuple(int(a) for a in row)]] for row in digits], dtype=np.int64)
    place = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return digits, vals, place


def axiom_violation(L: LevelMap, chunk: int = 256):
    """Pointwise search for a broken fuzzy-subspace axiom.

    Returns ``("add", x, y)`` with ``L(x+y) < min(L(x), L(y))``, or
    ``("scale", lam, x)`` with ``L(lam x) < L(x)``, or ``None``.
    """
    p, n = L.field.p, L.n
    digits, vals, place = _index_tables(L.field, n, L)
    N = len(vals)
    for start in range(0, N, chunk):
        dx = digits[start:start + chunk]
        s = ((dx[:, None, :] + digits[None, :, :]) % p) @ place
        lhs = vals[s]
        rhs = np.minimum(vals[start:start + chunk, None], vals[None, :])
        bad = np.argwhere(lhs < rhs)
        if bad.size:
            i, j = bad[0]
            return ("add", tuple(int(a) for a in digits[start + i]), tuple(int(a) for a in digits[j]))
    for lam in range(p):
        s = ((digits * lam) % p) @ place
        bad = np.flatnonzero(vals[s] < vals)
        if bad.size:
            return ("scale", lam, tuple(int(a) for a in digits[bad[0]]))
    return None


def verify_axioms_pointwise(L: LevelMap) -> bool:
    """``L(x+y) >= min(L(x), L(y))`` and ``L(lam x) >= L(x)`` for all inputs."""
    return axiom_violation(L) is None


# -- arithmetic --------------------------------------------------------------------

def _same_space(A: FuzzyLinearCode, B: FuzzyLinearCode):
    if A.field != B.field or A.n != B.n:
        raise FieldError(f"fuzzy codes live in different spaces: {A.field}^{A.n} vs {B.field}^{B.n}")


def _joint_levels(A: FuzzyLinearCode, B: FuzzyLinearCode) -> list[Fraction]:
    return sorted(set(A.alphas) | set(B.alphas), reverse=True)


def meet(A: FuzzyLinearCode, B: FuzzyLinearCode) -> FuzzyLinearCode:
    """Pointwise minimum; its cuts are intersections of cuts."""
    _same_space(A, B)
    chain = []
    for a in _joint_levels(A, B):
        ca, cb = A.cut(a), B.cut(a)
        if ca is not None and cb is not None:
            chain.append((a, ca.intersection(cb)))
    return FuzzyLinearCode.from_chain(A.field, A.n, chain)


def join_raw(A: FuzzyLinearCode, B: FuzzyLinearCode) -> tuple[LevelMap, bool]:
    """Pointwise maximum and whether it is still a fuzzy linear code."""
    _same_space(A, B)
    la, lb = A.level_map(), B.level_map()
    L = LevelMap(A.field, A.n, {x: max(v, lb.values[x]) for x, v in la.values.items()})
    return L, verify_axioms_pointwise(L)


def ext_sum(A: FuzzyLinearCode, B: FuzzyLinearCode) -> tuple[LevelMap, bool]:
    """Extension-principle sum ``max over z = x + y of min(A(x), B(y))``.

    ``z`` reaches level ``alpha`` exactly when it lies in ``A_alpha + B_alpha``,
    so the map is assembled from subspace sums of cuts.
    """
    _same_space(A, B)
    values: dict[Vector, Fraction] = {}
    for a in _joint_levels(A, B):
        ca, cb = A.cut(a), B.cut(a)
        if ca is None or cb is None:
            continue
        for z in ca.sum(cb).codewords():
            values.setdefault(z, a)
    zero = Fraction(0)
    for z in all_vectors(A.field, A.n):
        values.setdefault(z, zero)
    L = LevelMap(A.field, A.n, values)
    return L, verify_axioms_pointwise(L)


def direct_sum(A: FuzzyLinearCode, B: FuzzyLinearCode) -> FuzzyLinearCode:
    """Fuzzy code on GF(p)^(n+m) with ``(x | y) -> min(A(x), B(y))``."""
    if A.field != B.field:
        raise FieldError("direct sum needs a common field")
    chain = []
    for a in _joint_levels(A, B):
        ca, cb = A.cut(a), B.cut(a)
        if ca is not None and cb is not None:
            chain.append((a, ca.direct_sum(cb)))
    return FuzzyLinearCode.from_chain(A.field, A.n + B.n, chain)

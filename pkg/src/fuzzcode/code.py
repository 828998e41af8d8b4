"""Linear [n, k, d] codes over GF(p)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import FieldError, InvariantError, TooLarge
from .gf import (
    Field,
    FieldMatrix,
    Vector,
    enumeration_cap,
    inner_product,
    null_space,
    pack,
    rref,
    row_basis,
    unpack,
)


@dataclass(frozen=True)
class CodeSummary:
    n: int
    k: int
    d: int | None
    is_self_orthogonal: bool
    is_self_dual: bool
    t: int | None

    def line(self) -> str:
        tag = "self-dual" if self.is_self_dual else ("self-orthogonal" if self.is_self_orthogonal else "plain")
        d = "?" if self.d is None else str(self.d)
        return f"{self.n} {self.k} {d} {tag}"


@dataclass(frozen=True)
class LinearCode:
    """A k-dimensional subspace of GF(p)^n.

    ``basis`` is always the nonzero part of an rref matrix, so two codes are
    equal exactly when their bases are.  Build codes with :meth:`from_rows`.
    """

    field: Field
    n: int
    basis: FieldMatrix

    def __post_init__(self):
        if self.basis.ncols != self.n or self.basis.field != self.field:
            raise FieldError("basis does not match the code's field/length")
        R, _, k = rref(self.basis)
        if k != self.basis.nrows or R != self.basis:
            raise InvariantError("basis must be a full-rank rref matrix", "use LinearCode.from_rows")

    @classmethod
    def from_rows(cls, field: Field, n: int, rows: Sequence[Sequence[int]]) -> "LinearCode":
        """The span of ``rows``; dependent rows are dropped."""
        rows = [field.vector(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise FieldError(f"row of length {len(r)} in a length-{n} code")
        return cls(field, n, row_basis(FieldMatrix(field, tuple(rows), n)))

    @classmethod
    def from_matrix(cls, G: FieldMatrix) -> "LinearCode":
        return cls(G.field, G.ncols, row_basis(G))

    @classmethod
    def zero(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n, FieldMatrix(field, (), n))

    @classmethod
    def full(cls, field: Field, n: int) -> "LinearCode":
        return cls(field, n, FieldMatrix.identity(field, n))

    @property
    def k(self) -> int:
        return self.basis.nrows

    @property
    def q(self) -> int:
        return self.field.p

    @property
    def size(self) -> int:
        return self.field.p ** self.k

    @cached_property
    def parity(self) -> FieldMatrix:
        """Parity-check matrix: the rref basis of the dual code."""
        if self.k == 0:
            return FieldMatrix.identity(self.field, self.n)
        return row_basis(null_space(self.basis))

    def _check(self, x: Sequence[int]) -> Vector:
        x = self.field.vector(x)
        if len(x) != self.n:
            raise FieldError(f"vector of length {len(x)} for a length-{self.n} code")
        return x

    def _check_same_space(self, other: "LinearCode"):
        if self.field != other.field or self.n != other.n:
            raise FieldError(f"codes live in different spaces: {self.field}^{self.n} vs {other.field}^{other.n}")

    def contains(self, x: Sequence[int]) -> bool:
        return not any(self.syndrome(x))

    __contains__ = contains

    def encode(self, m: Sequence[int]) -> Vector:
        m = self.field.vector(m)
        if len(m) != self.k:
            raise FieldError(f"message of length {len(m)}, code dimension is {self.k}")
        return self.basis.vector_mul(m)

    def syndrome(self, y: Sequence[int], parity: FieldMatrix | None = None) -> Vector:
        """``H y^T`` for the cached parity check, or an explicit ``parity``."""
        y = self._check(y)
        H = self.parity if parity is None else parity
        return H.mul_vector(y)

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, self.parity)

    def is_subcode(self, other: "LinearCode") -> bool:
        """True when ``self`` is contained in ``other``."""
        self._check_same_space(other)
        return all(other.contains(r) for r in self.basis.rows)

    def is_self_orthogonal(self) -> bool:
        rows = self.basis.rows
        return all(inner_product(a, b, self.field) == 0 for a, b in itertools.combinations_with_replacement(rows, 2))

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.is_self_orthogonal()

    def sum(self, other: "LinearCode") -> "LinearCode":
        self._check_same_space(other)
        return LinearCode.from_rows(self.field, self.n, self.basis.rows + other.basis.rows)

    def intersection(self, other: "LinearCode") -> "LinearCode":
        self._check_same_space(other)
        return self.dual().sum(other.dual()).dual()

    def direct_sum(self, other: "LinearCode") -> "LinearCode":
        """The code ``{(x | y) : x in self, y in other}``."""
        if self.field != other.field:
            raise FieldError("direct sum needs a common field")
        n = self.n + other.n
        rows = [r + (0,) * other.n for r in self.basis.rows]
        rows += [(0,) * self.n + r for r in other.basis.rows]
        return LinearCode.from_rows(self.field, n, rows)

    def codewords(self, cap: int | None = None) -> Iterator[Vector]:
        """Every codeword, zero first; raises :class:`TooLarge` past ``cap``."""
        cap = enumeration_cap() if cap is None else cap
        if self.size > cap:
            raise TooLarge(f"codewords of [{self.n},{self.k}] code", self.size, cap)
        return iter_span(self.basis.rows, self.field, self.n)

    def min_distance(self, cap: int | None = None) -> int | None:
        """Minimum nonzero weight by full enumeration; ``None`` for the zero code."""
        cap = enumeration_cap() if cap is None else cap
        if self.size > cap:
            raise TooLarge(f"distance of [{self.n},{self.k}] code", self.size, cap)
        if self.k == 0:
            return None
        if self.field.p == 2:
            if self.n <= 64:
                return _min_weight_gf2_numpy(self.basis.packed)
            return _min_weight_gf2_gray(self.basis.packed)
        return _min_weight_numpy(self.basis, self.field.p)

    def error_capability(self, cap: int | None = None) -> int | None:
        d = self.min_distance(cap)
        return None if d is None else (d - 1) // 2

    def summary(self, cap: int | None = None) -> CodeSummary:
        try:
            d = self.min_distance(cap)
        except TooLarge:
            d = None
        t = None if d is None else (d - 1) // 2
        so = self.is_self_orthogonal()
        return CodeSummary(self.n, self.k, d, so, so and 2 * self.k == self.n, t)

    def __repr__(self) -> str:
        return f"LinearCode(GF({self.field.p}), [{self.n},{self.k}])"


def iter_span(rows: Sequence[Vector], field: Field, n: int) -> Iterator[Vector]:
    """All linear combinations of ``rows`` (assumed independent)."""
    if field.p == 2:
        words = [pack(r) for r in rows]
        # Gray-code walk: each step flips one generator in or out
        cur = 0
        yield (0,) * n
        for i in range(1, 1 << len(words)):
            cur ^= words[(i & -i).bit_length() - 1]
            yield unpack(cur, n)
        return
    p = field.p
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        acc = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                for j, a in enumerate(r):
                    acc[j] += c * a
        yield tuple(a % p for a in acc)


def _min_weight_gf2_numpy(words: Sequence[int]) -> int:
    arr = np.zeros(1, dtype=np.uint64)
    best = 65
    for w in words:
        new = arr ^ np.uint64(w)
        best = min(best, int(np.bitwise_count(new).min()))
        arr = np.concatenate([arr, new])
    return best


def _min_weight_gf2_gray(words: Sequence[int]) -> int:
    best = None
    cur = 0
    for i in range(1, 1 << len(words)):
        cur ^= words[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if best is None or w < best:
            best = w
    return best


def _min_weight_numpy(basis: FieldMatrix, p: int, chunk: int = 1 << 16) -> int:
    k, n = basis.shape
    G = np.array(basis.rows, dtype=np.int64)
    total = p**k
    best = n
    for start in range(1, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        acc = np.zeros((idx.size, n), dtype=np.int64)
        for i in range(k):
            digit = (idx // p**i) % p
            acc = (acc + digit[:, None] * G[i]) % p
        best = min(best, int(np.count_nonzero(acc, axis=1).min()))
    return best

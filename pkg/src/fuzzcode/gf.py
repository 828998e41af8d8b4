"""Exact linear algebra over prime fields GF(p).

Vectors are plain tuples of residues.  Matrices are immutable
:class:`FieldMatrix` values.  Over GF(2) row reduction runs on bit-packed
rows (column ``j`` is bit ``j`` of a Python int); every other prime uses
the scalar path, which also serves as the reference for the packed one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import FieldError, ParseError, RankError

Vector = tuple[int, ...]

DEFAULT_CAP = 1 << 22
MAX_PRIME = 1 << 31


def enumeration_cap(default: int = DEFAULT_CAP) -> int:
    """Cap on exhaustive enumerations; ``FUZZCODE_CAP`` overrides it."""
    raw = os.environ.get("FUZZCODE_CAP")
    if not raw:
        return default
    try:
        cap = int(raw, 0)
    except ValueError:
        raise FieldError(f"FUZZCODE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise FieldError("FUZZCODE_CAP must be positive")
    return cap


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise FieldError(f"field modulus must be prime, got {self.p!r}")
        if self.p > MAX_PRIME:
            raise FieldError(f"field modulus {self.p} exceeds 2^31")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def elements(self) -> range:
        return range(self.p)

    def vector(self, entries: Iterable[int]) -> Vector:
        """Validate residues and return them as a tuple."""
        v = tuple(entries)
        for a in v:
            if not isinstance(a, int) or not 0 <= a < self.p:
                raise FieldError(f"entry {a!r} is not a residue mod {self.p}")
        return v

    def zero(self, n: int) -> Vector:
        return (0,) * n

    def __str__(self) -> str:
        return f"GF({self.p})"


GF2 = Field(2)


# -- vector helpers ----------------------------------------------------------

def _check_pair(x: Sequence[int], y: Sequence[int]):
    if len(x) != len(y):
        raise FieldError(f"length mismatch: {len(x)} vs {len(y)}")


def add(x: Vector, y: Vector, field: Field) -> Vector:
    _check_pair(x, y)
    p = field.p
    return tuple((a + b) % p for a, b in zip(x, y))


def sub(x: Vector, y: Vector, field: Field) -> Vector:
    _check_pair(x, y)
    p = field.p
    return tuple((a - b) % p for a, b in zip(x, y))


def scale(lam: int, x: Vector, field: Field) -> Vector:
    p = field.p
    return tuple((lam * a) % p for a in x)


def inner_product(x: Vector, y: Vector, field: Field) -> int:
    """Euclidean inner product ``sum(x_i * y_i) mod p``."""
    _check_pair(x, y)
    return sum(a * b for a, b in zip(x, y)) % field.p


def weight(x: Sequence[int]) -> int:
    """Hamming weight: number of nonzero coordinates."""
    return sum(1 for a in x if a)


def distance(x: Vector, y: Vector) -> int:
    _check_pair(x, y)
    return sum(1 for a, b in zip(x, y) if a != b)


def pack(v: Sequence[int]) -> int:
    """Binary vector to int, coordinate ``j`` at bit ``j``."""
    out = 0
    for j, a in enumerate(v):
        if a:
            out |= 1 << j
    return out


def unpack(word: int, n: int) -> Vector:
    return tuple((word >> j) & 1 for j in range(n))


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldMatrix:
    """Dense immutable matrix over a prime field."""

    field: Field
    rows: tuple[Vector, ...]
    ncols: int

    def __post_init__(self):
        p = self.field.p
        for i, row in enumerate(self.rows):
            if len(row) != self.ncols:
                raise FieldError(f"row {i} has length {len(row)}, expected {self.ncols}")
            for a in row:
                if not 0 <= a < p:
                    raise FieldError(f"row {i}: entry {a} not reduced mod {p}")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "FieldMatrix":
        """Build a matrix, reducing integer entries mod p."""
        p = field.p
        rows = tuple(tuple(int(a) % p for a in r) for r in rows)
        if ncols is None:
            if not rows:
                raise FieldError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(field, rows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "FieldMatrix":
        return cls(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_packed(cls, words: Iterable[int], ncols: int) -> "FieldMatrix":
        return cls(GF2, tuple(unpack(w, ncols) for w in words), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    @cached_property
    def packed(self) -> tuple[int, ...]:
        if self.field.p != 2:
            raise FieldError("bit packing is only defined over GF(2)")
        return tuple(pack(r) for r in self.rows)

    def transpose(self) -> "FieldMatrix":
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return FieldMatrix(self.field, cols, len(self.rows))

    @property
    def T(self) -> "FieldMatrix":
        return self.transpose()

    def permute_columns(self, perm: Sequence[int]) -> "FieldMatrix":
        """Column ``j`` of the result is column ``perm[j]`` of ``self``."""
        if sorted(perm) != list(range(self.ncols)):
            raise FieldError("not a permutation of the columns")
        return FieldMatrix(self.field, tuple(tuple(r[c] for c in perm) for r in self.rows), self.ncols)

    def mul_vector(self, x: Sequence[int]) -> Vector:
        """Return ``self @ x^T`` as a tuple."""
        _check_pair(x, range(self.ncols))
        p = self.field.p
        return tuple(sum(a * b for a, b in zip(r, x)) % p for r in self.rows)

    def vector_mul(self, m: Sequence[int]) -> Vector:
        """Return ``m @ self`` (row vector times matrix)."""
        if len(m) != len(self.rows):
            raise FieldError(f"need {len(self.rows)} coefficients, got {len(m)}")
        p = self.field.p
        out = [0] * self.ncols
        for c, r in zip(m, self.rows):
            if c:
                for j, a in enumerate(r):
                    if a:
                        out[j] += c * a
        return tuple(a % p for a in out)

    def matmul(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.field != other.field or self.ncols != other.nrows:
            raise FieldError("incompatible matrices")
        cols = other.transpose().rows
        p = self.field.p
        rows = tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in self.rows)
        return FieldMatrix(self.field, rows, other.ncols)

    def is_zero(self) -> bool:
        return all(not any(r) for r in self.rows)

    def __str__(self) -> str:
        return format_matrix(self)


# -- row reduction -------------------------------------------------------------

def rref(M: FieldMatrix, packed: bool | None = None) -> tuple[FieldMatrix, list[int], int]:
    """Reduced row-echelon form.

    Returns ``(R, pivots, rank)``; ``R`` keeps the shape of ``M`` with zero
    rows at the bottom.  ``packed`` forces (True) or disables (False) the
    GF(2) bit-packed kernel; by default it is used whenever ``p == 2``.
    """
    if packed is None:
        packed = M.field.p == 2
    if packed:
        if M.field.p != 2:
            raise FieldError("packed row reduction requires GF(2)")
        words, pivots = _rref_packed(list(M.packed), M.ncols)
        R = FieldMatrix.from_packed(words, M.ncols)
    else:
        rows, pivots = _rref_scalar([list(r) for r in M.rows], M.ncols, M.field)
        R = FieldMatrix(M.field, tuple(tuple(r) for r in rows), M.ncols)
    return R, pivots, len(pivots)


def _rref_packed(words: list[int], ncols: int) -> tuple[list[int], list[int]]:
    pivots: list[int] = []
    prow = 0
    nrows = len(words)
    for col in range(ncols):
        if prow == nrows:
            break
        bit = 1 << col
        for r in range(prow, nrows):
            if words[r] & bit:
                break
        else:
            continue
        words[prow], words[r] = words[r], words[prow]
        pw = words[prow]
        for i in range(nrows):
            if i != prow and words[i] & bit:
                words[i] ^= pw
        pivots.append(col)
        prow += 1
    return words, pivots


def _rref_scalar(rows: list[list[int]], ncols: int, field: Field) -> tuple[list[list[int]], list[int]]:
    p = field.p
    pivots: list[int] = []
    prow = 0
    nrows = len(rows)
    for col in range(ncols):
        if prow == nrows:
            break
        for r in range(prow, nrows):
            if rows[r][col]:
                break
        else:
            continue
        rows[prow], rows[r] = rows[r], rows[prow]
        inv = pow(rows[prow][col], -1, p)
        pr = rows[prow] = [(a * inv) % p for a in rows[prow]]
        for i in range(nrows):
            f = rows[i][col]
            if i != prow and f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], pr)]
        pivots.append(col)
        prow += 1
    return rows, pivots


def rank(M: FieldMatrix) -> int:
    return rref(M)[2]


def row_basis(M: FieldMatrix) -> FieldMatrix:
    """The nonzero rows of ``rref(M)``: the canonical basis of the row space."""
    R, _, k = rref(M)
    return FieldMatrix(M.field, R.rows[:k], M.ncols)


def null_space(M: FieldMatrix) -> FieldMatrix:
    """Basis of ``{x : M x^T = 0}``, one row per free column of ``rref(M)``."""
    R, pivots, k = rref(M)
    p = M.field.p
    n = M.ncols
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-R.rows[i][f]) % p
        basis.append(tuple(v))
    return FieldMatrix(M.field, tuple(basis), n)


def standard_form(G: FieldMatrix) -> tuple[FieldMatrix, list[int]]:
    """Bring a full-rank generator matrix to ``[I_k | A]``.

    Returns ``(G', perm)`` with ``G' = rref(G.permute_columns(perm))``; a
    codeword ``c'`` of ``G'`` maps back to ``G`` via ``c[perm[j]] = c'[j]``.
    """
    R, pivots, k = rref(G)
    if k != G.nrows:
        raise RankError(f"generator matrix has rank {k} < {G.nrows} rows")
    pivset = set(pivots)
    perm = pivots + [j for j in range(G.ncols) if j not in pivset]
    Gs, _, _ = rref(G.permute_columns(perm))
    return Gs, perm


# -- text format -------------------------------------------------------------

def parse_vector(text: str, field: Field, n: int | None = None) -> Vector:
    """Parse ``"0101"``, ``"0 1 0 1"`` or ``"0,1,0,1"`` into a vector."""
    s = text.strip()
    if "," in s or " " in s or "\t" in s:
        tokens = s.replace(",", " ").split()
    elif field.p <= 9:
        tokens = list(s)
    else:
        tokens = [s]
    try:
        v = tuple(int(t) for t in tokens)
    except ValueError:
        raise FieldError(f"not a vector: {text!r}") from None
    v = field.vector(v)
    if n is not None and len(v) != n:
        raise FieldError(f"expected a vector of length {n}, got {len(v)}")
    return v


def format_vector(v: Sequence[int], field: Field, sep: str | None = None) -> str:
    """Contiguous digits when ``p <= 9``, otherwise comma-separated."""
    if sep is None:
        sep = "" if field.p <= 9 else ","
    return sep.join(str(a) for a in v)


def parse_rows(lines: Sequence[tuple[int, str]], field: Field, nrows: int, ncols: int) -> tuple[Vector, ...]:
    """Parse ``nrows`` matrix rows from ``(lineno, text)`` pairs.

    Rows are whitespace-separated residues; for ``p <= 9`` a single
    contiguous digit string is accepted too.
    """
    if len(lines) < nrows:
        last = lines[-1][0] + 1 if lines else 1
        raise ParseError(last, f"expected {nrows} matrix rows, found {len(lines)}")
    rows = []
    for lineno, text in lines[:nrows]:
        tokens = text.split()
        if len(tokens) == 1 and field.p <= 9 and len(tokens[0]) == ncols and ncols > 1:
            tokens = list(tokens[0])
        if len(tokens) != ncols:
            raise ParseError(lineno, f"expected {ncols} entries, found {len(tokens)}")
        try:
            row = tuple(int(t) for t in tokens)
        except ValueError:
            raise ParseError(lineno, f"non-integer entry in {text.strip()!r}") from None
        for a in row:
            if not 0 <= a < field.p:
                raise ParseError(lineno, f"entry {a} out of range for GF({field.p})")
        rows.append(row)
    for lineno, text in lines[nrows:]:
        raise ParseError(lineno, f"trailing content {text.strip()!r}")
    return tuple(rows)


def content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines paired with their 1-based line numbers."""
    return [(i, line) for i, line in enumerate(text.splitlines(), 1) if line.strip()]


def parse_matrix(text: str) -> FieldMatrix:
    lines = content_lines(text)
    if not lines:
        raise ParseError(1, "empty matrix text")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3:
        raise ParseError(lineno, "header must be 'p n_rows n_cols'")
    try:
        p, r, c = (int(t) for t in parts)
        field = Field(p)
    except (ValueError, FieldError) as exc:
        raise ParseError(lineno, str(exc)) from None
    if r < 0 or c < 0:
        raise ParseError(lineno, "negative dimension")
    rows = parse_rows(lines[1:], field, r, c)
    return FieldMatrix(field, rows, c)


def format_rows(rows: Iterable[Sequence[int]]) -> list[str]:
    return [" ".join(str(a) for a in r) for r in rows]


def format_matrix(M: FieldMatrix) -> str:
    lines = [f"{M.field.p} {M.nrows} {M.ncols}", *format_rows(M.rows)]
    return "\n".join(lines) + "\n"

"""Text file formats for linear and fuzzy codes.

LINEARCODE::

    LINEARCODE 1
    field: 2
    length: 7
    dim: 4
    1000011
    ...

FUZZYCODE::

    FUZZYCODE 1
    field: 2
    length: 8
    levels: 8
    alphas: 1 7/8 3/4 5/8 1/2 3/8 1/4 1/8
    dims: 0 1 2 3 4 5 6 7
    <K master rows>

Rows use the matrix row syntax: whitespace-separated residues, or one
digit string when ``p <= 9``.  Blank lines are ignored and anything after
the last row is an error.  Syntax problems raise :class:`ParseError` with a
1-based line number; well-formed files describing an invalid code raise
:class:`InvariantError`.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Union

from .code import LinearCode
from .errors import FieldError, InvariantError, ParseError
from .fuzzy import FuzzyLinearCode, as_level, format_level
from .gf import Field, FieldMatrix, content_lines, format_vector, parse_rows, rank

AnyCode = Union[LinearCode, FuzzyLinearCode]

LINEAR_MAGIC = "LINEARCODE 1"
FUZZY_MAGIC = "FUZZYCODE 1"


def _row_lines(rows, field: Field) -> list[str]:
    if field.p <= 9:
        return [format_vector(r, field) for r in rows]
    return [" ".join(str(a) for a in r) for r in rows]


def dumps_linear(C: LinearCode) -> str:
    lines = [LINEAR_MAGIC, f"field: {C.field.p}", f"length: {C.n}", f"dim: {C.k}"]
    lines += _row_lines(C.basis.rows, C.field)
    return "\n".join(lines) + "\n"


def dumps_fuzzy(A: FuzzyLinearCode) -> str:
    lines = [
        FUZZY_MAGIC,
        f"field: {A.field.p}",
        f"length: {A.n}",
        f"levels: {A.m}",
        "alphas: " + " ".join(format_level(a) for a in A.alphas),
        "dims: " + " ".join(str(k) for k in A.dims),
    ]
    lines += _row_lines(A.master_rows, A.field)
    return "\n".join(lines) + "\n"


def dumps(code: AnyCode) -> str:
    return dumps_fuzzy(code) if isinstance(code, FuzzyLinearCode) else dumps_linear(code)


def _header(lines, index: int, key: str) -> str:
    if index >= len(lines):
        last = lines[-1][0] + 1 if lines else 1
        raise ParseError(last, f"missing '{key}:' line")
    lineno, text = lines[index]
    name, sep, value = text.partition(":")
    if not sep or name.strip() != key:
        raise ParseError(lineno, f"expected '{key}: ...', got {text.strip()!r}")
    return value.strip()


def _int(lines, index: int, key: str, lo: int = 0) -> int:
    value = _header(lines, index, key)
    try:
        v = int(value)
    except ValueError:
        raise ParseError(lines[index][0], f"{key} must be an integer, got {value!r}") from None
    if v < lo:
        raise ParseError(lines[index][0], f"{key} must be >= {lo}, got {v}")
    return v


def _field(lines, index: int) -> Field:
    p = _int(lines, index, "field", 2)
    try:
        return Field(p)
    except FieldError as exc:
        raise ParseError(lines[index][0], str(exc)) from None


def _magic(lines, expected: str):
    if not lines:
        raise ParseError(1, "empty file")
    lineno, text = lines[0]
    if text.strip() != expected:
        raise ParseError(lineno, f"expected {expected!r}, got {text.strip()!r}")


def loads_linear(text: str) -> LinearCode:
    lines = content_lines(text)
    _magic(lines, LINEAR_MAGIC)
    field = _field(lines, 1)
    n = _int(lines, 2, "length", 1)
    k = _int(lines, 3, "dim")
    if k > n:
        raise ParseError(lines[3][0], f"dim {k} exceeds length {n}")
    rows = parse_rows(lines[4:], field, k, n)
    if k and rank(FieldMatrix(field, rows, n)) != k:
        raise InvariantError("basis rows must be linearly independent", f"rank below dim {k}")
    return LinearCode.from_rows(field, n, rows)


def _int_list(lines, index: int, key: str, count: int) -> list[str]:
    tokens = _header(lines, index, key).split()
    if len(tokens) != count:
        raise ParseError(lines[index][0], f"{key} needs {count} entries, found {len(tokens)}")
    return tokens


def loads_fuzzy(text: str) -> FuzzyLinearCode:
    lines = content_lines(text)
    _magic(lines, FUZZY_MAGIC)
    field = _field(lines, 1)
    n = _int(lines, 2, "length", 1)
    m = _int(lines, 3, "levels")
    alphas: list[Fraction] = []
    for tok in _int_list(lines, 4, "alphas", m):
        if "." in tok:
            raise ParseError(lines[4][0], f"alpha {tok!r} must be an exact fraction")
        try:
            alphas.append(as_level(tok))
        except ValueError as exc:
            raise ParseError(lines[4][0], str(exc)) from None
    dims = []
    for tok in _int_list(lines, 5, "dims", m):
        try:
            dims.append(int(tok))
        except ValueError:
            raise ParseError(lines[5][0], f"dim {tok!r} is not an integer") from None
    K = dims[-1] if dims else 0
    if not 0 <= K <= n:
        raise ParseError(lines[5][0], f"last dim {K} outside [0, {n}]")
    rows = parse_rows(lines[6:], field, K, n)
    return FuzzyLinearCode(field, n, rows, tuple(zip(alphas, dims)))


def loads(text: str) -> AnyCode:
    """Read either format, dispatching on the first line."""
    lines = content_lines(text)
    if lines and lines[0][1].strip() == FUZZY_MAGIC:
        return loads_fuzzy(text)
    if lines and lines[0][1].strip() == LINEAR_MAGIC:
        return loads_linear(text)
    first = lines[0] if lines else (1, "")
    raise ParseError(first[0], f"unknown file type {first[1].strip()!r}")


def read_code(path: str | Path) -> AnyCode:
    return loads(Path(path).read_text())


def write_code(code: AnyCode, path: str | Path) -> None:
    Path(path).write_text(dumps(code))

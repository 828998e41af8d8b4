"""Fuzzy orthogonality, fuzzy duals and the self-dual / self-orthogonal constructions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .code import LinearCode
from .errors import DualDoesNotExist, FieldError, InvariantError
from .fuzzy import FuzzyLinearCode, LevelLike, as_level, format_level
from .gf import GF2
from .zoo import SIMPLEX_ROWS

HALF = Fraction(1, 2)


def _orthogonality_defect(A: FuzzyLinearCode, B: FuzzyLinearCode) -> str | None:
    if A.field != B.field or A.n != B.n:
        raise FieldError(f"fuzzy codes live in different spaces: {A.field}^{A.n} vs {B.field}^{B.n}")
    want = {1 - c for c in A.image()}
    if set(B.image()) != want:
        return "image of B is not {1 - c : c in Im(A)}"
    for t in sorted(set(A.image()) | {Fraction(0), Fraction(1)}, reverse=True):
        ca, cb = A.cut(t), B.cut(1 - t)
        if ca is None or cb is None:
            return f"empty cut at t = {format_level(t)}"
        if cb != ca.dual():
            return f"B cut at {format_level(1 - t)} is not the dual of A cut at {format_level(t)}"
    return None


def is_orthogonal(A: FuzzyLinearCode, B: FuzzyLinearCode) -> bool:
    """``Im(B) = 1 - Im(A)`` and ``B_{1-t} = (A_t)^perp`` for ``t`` in ``Im(A)`` and {0, 1}.

    An empty cut on either side makes the check fail.
    """
    return _orthogonality_defect(A, B) is None


def fuzzy_dual(A: FuzzyLinearCode) -> FuzzyLinearCode:
    """The unique fuzzy code orthogonal to ``A``.

    Raises:
        DualDoesNotExist: if ``|Im(A)| <= 1``, if some cut of ``A`` is not the
            dual of another cut, or if the reversed chain still fails
            :func:`is_orthogonal` (for instance when ``A`` never attains 1).
    """
    img = A.image()
    if len(img) <= 1:
        raise DualDoesNotExist(img[0] if img else None, "image has a single value")
    cuts = {c: A.cut(c) for c in img}
    duals = {c: cuts[c].dual() for c in img}
    for gamma in img:
        if not any(cuts[gamma] == duals[eps] for eps in img):
            k = cuts[gamma].k
            raise DualDoesNotExist(
                gamma, f"cut of dimension {k} at {format_level(gamma)} is not the dual of any cut"
            )
    B = FuzzyLinearCode.from_chain(A.field, A.n, [(1 - c, duals[c]) for c in img])
    defect = _orthogonality_defect(A, B)
    if defect is not None:
        raise DualDoesNotExist(None, defect)
    return B


def is_fuzzy_self_orthogonal(A: FuzzyLinearCode) -> bool:
    img = A.image()
    if len(img) <= 1:
        return False
    for a in img:
        c = A.cut(1 - a)
        if c is None or c.dual() != A.cut(a):
            return False
    return True


def self_dual_levels(A: FuzzyLinearCode) -> list[Fraction]:
    """Levels in ``Im(A)`` whose cut is a self-dual code."""
    return [a for a in A.image() if A.cut(a).is_self_dual()]


def is_fuzzy_self_dual(A: FuzzyLinearCode) -> bool:
    # a self-dual cut of a fuzzy self-orthogonal code can only sit at 1/2
    if not is_fuzzy_self_orthogonal(A):
        return False
    return HALF in A.image() and A.cut(HALF).is_self_dual()


def build_fuzzy_self_dual(
    C: LinearCode, basis_order: Sequence[Sequence[int]], alphas: Sequence[LevelLike]
) -> FuzzyLinearCode:
    """Fuzzy self-dual code from a self-dual ``[2h, h]`` code.

    With ``S_i`` the span of the first ``i`` basis vectors, the chain is
    ``S_0 < ... < S_{h-1} < C < S_{h-1}^perp < ... < S_0^perp`` at levels
    ``alpha_0 .. alpha_{h-1}, 1/2, 1 - alpha_{h-1} .. 1 - alpha_0``.

    ``alphas`` must be non-increasing and lie in ``(1/2, 1]``.  A run of equal
    values keeps only its first subcode ``S_i`` (and its dual ``S_i^perp``);
    keeping more would break ``(A_a)^perp = A_{1-a}``.
    """
    if not C.is_self_dual():
        raise InvariantError("C must be self-dual", repr(C))
    h = C.k
    rows = [C.field.vector(r) for r in basis_order]
    if len(rows) != h or LinearCode.from_rows(C.field, C.n, rows) != C:
        raise InvariantError("basis_order must be a basis of C", f"need {h} independent codewords of C")
    alphas = [as_level(a) for a in alphas]
    if len(alphas) != h:
        raise ValueError(f"need {h} alphas, got {len(alphas)}")
    for a in alphas:
        if not HALF < a <= 1:
            raise ValueError(f"alpha {a} outside (1/2, 1]")
    for a, b in zip(alphas, alphas[1:]):
        if b > a:
            raise ValueError("alphas must be non-increasing")

    chain: list = [(HALF, rows)]
    for i, a in enumerate(alphas):
        if i and alphas[i - 1] == a:
            continue
        chain.append((a, rows[:i]))
        chain.append((1 - a, LinearCode.from_rows(C.field, C.n, rows[:i]).dual()))
    return FuzzyLinearCode.from_chain(C.field, C.n, chain)


def dimension_parameterized(C: LinearCode, basis_order: Sequence[Sequence[int]] | None = None) -> FuzzyLinearCode:
    """:func:`build_fuzzy_self_dual` with ``alpha_i = 1 - i / n``."""
    if basis_order is None:
        basis_order = C.basis.rows
    return build_fuzzy_self_dual(C, basis_order, [1 - Fraction(i, C.n) for i in range(C.k)])


def embed_self_orthogonal(C: LinearCode) -> FuzzyLinearCode:
    """Chain ``{0} < C < C^perp < V`` at levels ``1, 1 - k/n, k/n, 0``."""
    if C.k == 0:
        raise InvariantError("C must be a nonzero self-orthogonal code", "got the zero code")
    if not C.is_self_orthogonal():
        raise InvariantError("C must be self-orthogonal", repr(C))
    r = Fraction(C.k, C.n)
    chain = [(1, LinearCode.zero(C.field, C.n)), (1 - r, C), (r, C.dual())]
    return FuzzyLinearCode.from_chain(C.field, C.n, chain)


def fuzzy_simplex_hamming() -> FuzzyLinearCode:
    """Chain ``S_0 < S_1 < S_2 < S_3 < S_3^perp < S_2^perp < S_1^perp < V_7``.

    ``S_i`` is spanned by the first ``i`` simplex rows and sits at ``1 - i/7``;
    ``S_i^perp`` sits at ``i/7``.  ``S_3^perp`` is the [7,4,3] Hamming code.
    """
    chain = []
    for i in range(4):
        S = LinearCode.from_rows(GF2, 7, SIMPLEX_ROWS[:i])
        chain.append((1 - Fraction(i, 7), SIMPLEX_ROWS[:i]))
        chain.append((Fraction(i, 7), S.dual()))
    return FuzzyLinearCode.from_chain(GF2, 7, chain)

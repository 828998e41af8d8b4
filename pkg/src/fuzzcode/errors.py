"""Exception hierarchy shared by the fuzzcode modules."""

from __future__ import annotations


class FuzzCodeError(Exception):
    """Base class for every error raised by this package."""


class FieldError(FuzzCodeError, ValueError):
    """Bad modulus, out-of-range residue, or mismatched field/length."""


class RankError(FuzzCodeError, ValueError):
    """A matrix lacks the rank an operation requires."""


class TooLarge(FuzzCodeError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} items exceeds enumeration cap {cap}")
        self.size = size
        self.cap = cap


class InvariantError(FuzzCodeError, ValueError):
    """A value violates a documented structural invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)
        self.invariant = invariant


class NotFuzzyLinear(FuzzCodeError):
    """A level map has an upper cut that is not a linear subspace.

    ``witness`` is ``("add", x, y)`` when ``x + y`` escapes the cut, or
    ``("scale", lam, x)`` when ``lam * x`` does.
    """

    def __init__(self, alpha, witness):
        kind = witness[0]
        if kind == "add":
            _, x, y = witness
            detail = f"{_fmt(x)} + {_fmt(y)} leaves the cut"
        else:
            _, lam, x = witness
            detail = f"{lam} * {_fmt(x)} leaves the cut"
        super().__init__(f"upper cut at {alpha} is not a subspace: {detail}")
        self.alpha = alpha
        self.witness = witness


class DualDoesNotExist(FuzzCodeError):
    """No fuzzy code is orthogonal to the given one."""

    def __init__(self, gamma, reason: str):
        super().__init__(f"fuzzy dual does not exist (level {gamma}): {reason}")
        self.gamma = gamma


class NotNested(FuzzCodeError, ValueError):
    """The base cut is not a proper subcode of the ambient cut."""


class EmptyCut(FuzzCodeError, ValueError):
    """An upper cut above the top level was requested where a code is needed."""


class ParseError(FuzzCodeError, ValueError):
    """Malformed text input; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MembershipZeroOutsideChain(UserWarning):
    """Received word lies outside every stored cut; decoding used the full space."""


def _fmt(v) -> str:
    return "".join(str(a) for a in v) if all(0 <= a < 10 for a in v) else ",".join(map(str, v))

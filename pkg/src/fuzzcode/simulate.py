"""Seeded noisy-channel simulation of fuzzy syndrome decoding.

Each trial draws a uniform codeword of ``A_alpha1``, passes it through a
q-ary symmetric channel and decodes.  Trial ``t`` uses its own generator
seeded by ``(seed, t)``, so results do not depend on execution order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .decoder import decode
from .errors import EmptyCut, MembershipZeroOutsideChain
from .fuzzy import FuzzyLinearCode, LevelLike, as_level, format_level
from .gf import Vector, add, weight

OUTCOMES = ("clean", "corrected", "miscorrected", "undetected")


@dataclass(frozen=True)
class TrialOutcome:
    sent: Vector
    error: Vector
    decoded: Vector
    outcome: str
    decoder_used: bool
    reliable: bool
    outside_chain: bool
    membership_restored: bool


@dataclass(frozen=True)
class SimReport:
    """Aggregated counts; :meth:`text` renders them in a fixed order."""

    n: int
    alpha1: Fraction
    channel_p: float
    seed: int
    trials: int
    successes: int
    decoded: int
    membership_restored: int
    undetected: int
    unreliable: int
    outside_chain: int
    error_weight_sum: int

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials

    @property
    def membership_correction_rate(self) -> float:
        return self.membership_restored / self.decoded if self.decoded else 1.0

    @property
    def average_error_weight(self) -> float:
        return self.error_weight_sum / self.trials

    def text(self) -> str:
        rows = [
            ("length", self.n),
            ("alpha1", format_level(self.alpha1)),
            ("channel_p", repr(float(self.channel_p))),
            ("seed", self.seed),
            ("trials", self.trials),
            ("frame_success_rate", f"{self.success_rate:.6f}"),
            ("membership_correction_rate", f"{self.membership_correction_rate:.6f}"),
            ("average_error_weight", f"{self.average_error_weight:.6f}"),
            ("decoded", self.decoded),
            ("undetected", self.undetected),
            ("unreliable", self.unreliable),
            ("outside_chain", self.outside_chain),
        ]
        return "".join(f"{k}: {v}\n" for k, v in rows)


def run_trial(A: FuzzyLinearCode, alpha1: LevelLike, sent: Sequence[int], error: Sequence[int]) -> TrialOutcome:
    """Send ``sent`` with additive ``error`` and classify the decoder's answer.

    The decoder runs only when the received word falls below ``alpha1``;
    a changed word that stays at or above ``alpha1`` is ``undetected``.
    """
    alpha1 = as_level(alpha1)
    x = A.field.vector(sent)
    e = A.field.vector(error)
    y = add(x, e, A.field)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MembershipZeroOutsideChain)
        r = decode(A, alpha1, y)
    used = A.membership(y) < alpha1
    if not used:
        outcome = "clean" if y == x else "undetected"
    else:
        outcome = "corrected" if r.codeword == x else "miscorrected"
    return TrialOutcome(
        x, e, r.codeword, outcome, used, r.reliable, r.outside_chain,
        used and r.corrected_membership == A.membership(x),
    )


def _channel(rng: np.random.Generator, n: int, q: int, p: float) -> Vector:
    hit = rng.random(n) < p
    shift = rng.integers(1, q, size=n) if q > 2 else np.ones(n, dtype=np.int64)
    return tuple(int(s) if h else 0 for h, s in zip(hit, shift))


def simulate(A: FuzzyLinearCode, alpha1: LevelLike, channel_p: float, trials: int, seed: int) -> SimReport:
    if not 0 <= channel_p < 1:
        raise ValueError(f"channel probability must lie in [0, 1), got {channel_p}")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    alpha1 = as_level(alpha1)
    C1 = A.cut(alpha1)
    if C1 is None or alpha1 == 0:
        raise EmptyCut(f"no codewords at level {format_level(alpha1)}")
    q = A.field.p
    G = np.array(C1.basis.rows, dtype=np.int64).reshape(C1.k, A.n)
    counts = dict.fromkeys(OUTCOMES, 0)
    decoded = restored = unreliable = outside = wsum = 0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        coeffs = rng.integers(0, q, size=C1.k)
        x = tuple(int(a) for a in (coeffs @ G) % q) if C1.k else A.field.zero(A.n)
        e = _channel(rng, A.n, q, channel_p)
        res = run_trial(A, alpha1, x, e)
        counts[res.outcome] += 1
        wsum += weight(e)
        if res.decoder_used:
            decoded += 1
            restored += res.membership_restored
            unreliable += not res.reliable
            outside += res.outside_chain
    return SimReport(
        A.n, alpha1, channel_p, seed, trials,
        counts["clean"] + counts["corrected"], decoded, restored,
        counts["undetected"], unreliable, outside, wsum,
    )

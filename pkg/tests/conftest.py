import random
from fractions import Fraction

import pytest

from fuzzcode.code import LinearCode
from fuzzcode.fuzzy import FuzzyLinearCode
from fuzzcode.gf import Field


def random_rows(rng: random.Random, p: int, k: int, n: int):
    return [tuple(rng.randrange(p) for _ in range(n)) for _ in range(k)]


def random_code(rng: random.Random, p: int, n: int, k: int | None = None) -> LinearCode:
    if k is None:
        k = rng.randint(0, n)
    return LinearCode.from_rows(Field(p), n, random_rows(rng, p, k, n))


def random_fuzzy(rng: random.Random, p: int, n: int, max_levels: int = 4) -> FuzzyLinearCode:
    """A random chain with random rational levels; zero or full cuts allowed."""
    field = Field(p)
    m = rng.randint(1, max_levels)
    alphas = sorted({Fraction(rng.randint(1, 12), 12) for _ in range(m)}, reverse=True)
    rows = random_rows(rng, p, n, n)
    cuts = sorted(rng.randint(0, n) for _ in alphas)
    return FuzzyLinearCode.from_chain(field, n, [(a, rows[:k]) for a, k in zip(alphas, cuts)])


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")

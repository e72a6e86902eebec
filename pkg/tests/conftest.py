import sys
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from thompsonkit.measures import random_epword
from thompsonkit.thompson import PrefixMap, apply_dyadic, apply_seq, compose, random_element
from thompsonkit.words import DyadicPoint

T_GENS = ("A", "B", "rot:1/2", "rot:1/4")
F_GENS = ("A", "B")

# not in T: swaps the two quarter cylinders of [0, 1/2)
SWAP = PrefixMap((("00", "01"), ("01", "00"), ("1", "1")))


def random_T(rng, max_len=8):
    return random_element(rng, int(rng.integers(0, max_len + 1)), T_GENS)[1]


def random_F(rng, max_len=8):
    return random_element(rng, int(rng.integers(0, max_len + 1)), F_GENS)[1]


def random_V(rng, max_len=6):
    g = random_T(rng, max_len)
    return compose(g, SWAP) if rng.integers(2) else g


def random_rational(rng, max_den=60):
    den = int(rng.integers(1, max_den + 1))
    return Fraction(int(rng.integers(0, den)), den)


def split_pair(s, rng):
    """A non-reduced table for the same element: one pair split in two."""
    pairs = list(s.pairs)
    i = int(rng.integers(len(pairs)))
    w, z = pairs.pop(i)
    return pairs + [(w + "0", z + "0"), (w + "1", z + "1")]


def random_cantor_point(rng):
    while True:
        x = random_epword(rng)
        if not x.is_dyadic:
            return x


def random_dyadic_point(rng, max_len=8):
    n = int(rng.integers(0, max_len + 1))
    return DyadicPoint(format(int(rng.integers(0, 2**n)), f"0{n}b") if n else "")


def random_point(rng):
    return random_cantor_point(rng) if rng.integers(2) else random_dyadic_point(rng)


def apply_point(g, x):
    return apply_dyadic(g, x) if isinstance(x, DyadicPoint) else apply_seq(g, x)


def raw(x, n):
    return x.preperiod + x.period * (n // len(x.period) + 1)


def oracle_cantor_defect(g, n, width=160):
    """Count unmatched atoms on windows of the raw expansions."""
    y, k, x = g.target, g.cocycle, g.source
    rx, ry = raw(x, n + width), raw(y, n + width)
    moved = Counter((k + j, rx[j:j + width]) for j in range(1, n + 1))
    target = Counter((i, ry[i:i + width]) for i in range(1, n + 1))
    unmatched = sum((moved - target).values()) + sum((target - moved).values())
    return Fraction(unmatched, n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    from test_acceptance import report_line

    terminalreporter.section("acceptance criteria")
    for i in sorted(results):
        terminalreporter.write_line(report_line(i))

"""The groupoid of germs of T acting on the circle.

Germs at dyadic points are stored as ``DyadicGerm(target, source, slopes)``
with the pair of one-sided slope exponents as the Z^2 coordinate.  Germs
at other points are Cuntz-groupoid triples ``CantorGerm(target, cocycle,
source)`` on the binary expansions.  Fiber measures for both parts and the
exact translation defect of Borel amenability live here too.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

from .errors import DyadicPointError, KindMismatch, NotInT, SourceTargetMismatch
from .measures import FiniteMeasure, folner_box, l1_distance, pushforward
from .thompson import (
    A,
    B,
    PrefixMap,
    SlopePair,
    apply_dyadic,
    apply_seq,
    approach_from_below,
    compose,
    identity,
    invert,
    is_in_T,
    pair_at,
    rot,
    slope_exponents,
)
from .words import DyadicPoint, EPWord, head, phi, shift

__all__ = [
    "CantorGerm",
    "DyadicGerm",
    "FiberMeasure",
    "Part",
    "germ_at",
    "germ_equal",
    "compose_germs",
    "invert_germ",
    "identity_germ",
    "phi_tilde",
    "fiber_measure",
    "fiber_measure_dyadic",
    "condition_ii_defect_cantor",
    "condition_ii_defect_dyadic",
    "cantor_bound",
    "dyadic_bound",
    "invariant_split",
    "parse_germ",
    "standard_germ_set",
]


def _tail_witness(target: EPWord, k: int, source: EPWord) -> tuple[str, str]:
    # shift(target, m + k) == shift(source, m) holds for all m past the least valid one
    lo = max(0, -k)
    m = max(lo, len(source.preperiod), len(target.preperiod) - k)
    if shift(target, m + k) != shift(source, m):
        raise ValueError(f"{target} and {source} are not tail equivalent with cocycle {k}")
    while m > lo and shift(target, m - 1 + k) == shift(source, m - 1):
        m -= 1
    return head(target, m + k), head(source, m)


@dataclass(frozen=True, order=True)
class CantorGerm:
    """Germ ``target <- source`` with ``target = w t``, ``source = v t``,
    ``|w| - |v| = cocycle``."""

    target: EPWord
    cocycle: int
    source: EPWord

    def __post_init__(self):
        if self.source.is_dyadic:
            raise DyadicPointError(f"source {self.source} is dyadic; use DyadicGerm")
        self.witness  # validates tail equivalence

    @cached_property
    def witness(self) -> tuple[str, str]:
        """Minimal words ``(w, v)`` exhibiting the tail equivalence."""
        return _tail_witness(self.target, self.cocycle, self.source)

    def __str__(self):
        return f"{self.source} =={self.cocycle}==> {self.target}"


@dataclass(frozen=True, order=True)
class DyadicGerm:
    target: DyadicPoint
    source: DyadicPoint
    slopes: SlopePair = SlopePair(0, 0)

    def __post_init__(self):
        object.__setattr__(self, "slopes", SlopePair(*self.slopes))

    def __str__(self):
        a, b = self.slopes
        return f"{self.source} --({a},{b})--> {self.target}"


Germ = Union[CantorGerm, DyadicGerm]

_CANTOR_RE = re.compile(r"^\s*(\S+)\s*==(-?\d+)==>\s*(\S+)\s*$")
_DYADIC_RE = re.compile(r"^\s*(\S+)\s*--\((-?\d+),\s*(-?\d+)\)-->\s*(\S+)\s*$")


def parse_germ(text: str) -> Germ:
    """Inverse of ``str`` on germs: ``"x ==k==> y"`` or ``"x --(a,b)--> y"``."""
    m = _CANTOR_RE.match(text)
    if m:
        return CantorGerm(EPWord.parse(m.group(3)), int(m.group(2)), EPWord.parse(m.group(1)))
    m = _DYADIC_RE.match(text)
    if m:
        return DyadicGerm(
            DyadicPoint.parse(m.group(4)),
            DyadicPoint.parse(m.group(1)),
            SlopePair(int(m.group(2)), int(m.group(3))),
        )
    raise ValueError(f"cannot parse germ {text!r}")


def _as_point(x):
    if isinstance(x, EPWord) and x.is_dyadic:
        return DyadicPoint(x.preperiod)
    return x


def germ_at(g: PrefixMap, x) -> Germ:
    """Germ of ``g`` at an EPWord or DyadicPoint ``x``."""
    if not is_in_T(g):
        raise NotInT(f"{g} is not in T")
    x = _as_point(x)
    if isinstance(x, DyadicPoint):
        return DyadicGerm(apply_dyadic(g, x), x, slope_exponents(g, x))
    w, z = pair_at(g, x)
    return CantorGerm(apply_seq(g, x), len(z) - len(w), x)


def identity_germ(x) -> Germ:
    x = _as_point(x)
    if isinstance(x, DyadicPoint):
        return DyadicGerm(x, x, SlopePair(0, 0))
    return CantorGerm(x, 0, x)


def germ_equal(g: PrefixMap, h: PrefixMap, x) -> bool:
    """Whether ``g`` and ``h`` agree on a neighbourhood of ``x``.

    Decided on ``f = g^-1 h``: the table pieces touching ``x`` (both sides
    of a dyadic point) must all be identity pieces.
    """
    for e in (g, h):
        if not is_in_T(e):
            raise NotInT(f"{e} is not in T")
    f = compose(invert(g), h)
    x = _as_point(x)
    if isinstance(x, DyadicPoint):
        pieces = [pair_at(f, x.sequence), pair_at(f, approach_from_below(x))]
    else:
        pieces = [pair_at(f, x)]
    return all(w == z for w, z in pieces)


def compose_germs(a: Germ, b: Germ) -> Germ:
    """``a . b``, defined when ``source(a) == target(b)``."""
    if type(a) is not type(b):
        raise KindMismatch(f"cannot compose {type(a).__name__} with {type(b).__name__}")
    if a.source != b.target:
        raise SourceTargetMismatch(f"source {a.source} of {a} differs from target {b.target} of {b}")
    if isinstance(a, CantorGerm):
        return CantorGerm(a.target, a.cocycle + b.cocycle, b.source)
    return DyadicGerm(a.target, b.source, a.slopes + b.slopes)


def invert_germ(a: Germ) -> Germ:
    if isinstance(a, CantorGerm):
        return CantorGerm(a.source, -a.cocycle, a.target)
    return DyadicGerm(a.source, a.target, -a.slopes)


def phi_tilde(g: PrefixMap, theta) -> CantorGerm:
    """Transport the circle germ ``[g, theta]`` to the Cantor space."""
    theta = Fraction(theta)
    if invariant_split(theta) is Part.DYADIC:
        raise DyadicPointError(f"{theta} is dyadic")
    return germ_at(g, phi(theta))


class Part(enum.Enum):
    DYADIC = "dyadic"
    CANTOR = "cantor"


def invariant_split(x) -> Part:
    """Which of the two T-invariant pieces of the unit space ``x`` lies in."""
    if isinstance(x, DyadicPoint):
        return Part.DYADIC
    if isinstance(x, EPWord):
        return Part.DYADIC if x.is_dyadic else Part.CANTOR
    den = Fraction(x).denominator
    return Part.DYADIC if den & (den - 1) == 0 else Part.CANTOR


@dataclass(frozen=True)
class FiberMeasure:
    base: EPWord
    measure: FiniteMeasure
    n: int


def fiber_measure(x: EPWord, n: int) -> FiberMeasure:
    """Uniform measure on the germs ``(x, j, shift(x, j))``, j = 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    w = Fraction(1, n)
    m = FiniteMeasure((CantorGerm(x, j, shift(x, j)), w) for j in range(1, n + 1))
    return FiberMeasure(x, m, n)


def condition_ii_defect_cantor(g: CantorGerm, n: int) -> Fraction:
    moved = pushforward(lambda h: compose_germs(g, h), fiber_measure(g.source, n).measure)
    return l1_distance(moved, fiber_measure(g.target, n).measure)


def cantor_bound(g: CantorGerm, n: int) -> Fraction:
    w, v = g.witness
    return Fraction(2 * (len(v) + len(w)), n)


def fiber_measure_dyadic(x: DyadicPoint, n: int, basepoint: DyadicPoint = DyadicPoint("")) -> FiniteMeasure:
    box = folner_box(n)
    return pushforward(lambda m: DyadicGerm(x, basepoint, m), box)


def condition_ii_defect_dyadic(g: DyadicGerm, n: int) -> Fraction:
    moved = pushforward(lambda h: compose_germs(g, h), fiber_measure_dyadic(g.source, n))
    return l1_distance(moved, fiber_measure_dyadic(g.target, n))


def dyadic_bound(g: DyadicGerm, n: int) -> Fraction:
    a, b = g.slopes
    return Fraction(2 * (abs(a) + abs(b)), 2 * n + 1)


def standard_germ_set() -> list[Germ]:
    """Germs used by the amenability report when none are given."""
    x01 = EPWord("", "01")
    third = phi(Fraction(1, 3))
    fifth = phi(Fraction(1, 5))
    return [
        identity_germ(x01),
        CantorGerm(x01, 2, x01),
        germ_at(A, EPWord("", "1")),
        germ_at(A, third),
        germ_at(B, fifth),
        germ_at(compose(A, invert(B)), phi(Fraction(5, 7))),
        germ_at(rot(Fraction(1, 4)), phi(Fraction(2, 3))),
        germ_at(compose(B, rot(Fraction(1, 2))), EPWord("1", "011")),
        identity_germ(DyadicPoint("")),
        DyadicGerm(DyadicPoint(""), DyadicPoint(""), SlopePair(1, 0)),
        germ_at(A, DyadicPoint("")),
        germ_at(B, DyadicPoint("1")),
        germ_at(compose(A, rot(Fraction(1, 4))), DyadicPoint("011")),
        germ_at(identity(), DyadicPoint("101")),
    ]

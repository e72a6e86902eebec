"""Coset spaces T/F and T/[F,F], and the composition of approximately
invariant maps through an intermediate subgroup.

T/F is identified with the dyadic points via ``tF -> t.0^inf``.  T/[F,F]
is identified with dyadic points times Z^2, using the rotation
cross-section :func:`sigma` and the abelianization of F.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import NotInT
from .measures import FiniteMeasure, folner_box, l1_distance, mu_N, pushforward, translate
from .thompson import (
    PrefixMap,
    SlopePair,
    abelianization,
    apply_dyadic,
    apply_seq,
    compose,
    invert,
    is_in_T,
    rot,
)
from .words import DyadicPoint, EPWord

__all__ = [
    "CosetTF",
    "CosetTFF",
    "coset_of",
    "sigma",
    "act_TF",
    "estar_cocycle",
    "act_TFF",
    "ext_compose",
    "ext_defect",
    "ExtDefect",
    "mu_N_cosets",
    "constant_folner",
]

ORIGIN = DyadicPoint("")


@dataclass(frozen=True, order=True)
class CosetTF:
    point: DyadicPoint

    def __str__(self):
        return str(self.point)


@dataclass(frozen=True, order=True)
class CosetTFF:
    point: DyadicPoint
    ab: tuple[int, int] = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "ab", SlopePair(*self.ab))

    def __str__(self):
        return f"{self.point}@({self.ab[0]},{self.ab[1]})"


def _require_T(s: PrefixMap) -> None:
    if not is_in_T(s):
        raise NotInT(f"{s} is not in T")


def _point(c) -> DyadicPoint:
    return c.point if isinstance(c, (CosetTF, CosetTFF)) else c


def coset_of(t: PrefixMap) -> CosetTF:
    _require_T(t)
    return CosetTF(apply_dyadic(t, ORIGIN))


def sigma(d) -> PrefixMap:
    """Rotation carrying 0^inf to ``d``; a cross-section of T -> T/F."""
    return _sigma(_point(d))


@lru_cache(maxsize=4096)
def _sigma(d: DyadicPoint) -> PrefixMap:
    return rot(d.theta)


def act_TF(s: PrefixMap, c) -> CosetTF:
    _require_T(s)
    return CosetTF(apply_dyadic(s, _point(c)))


def estar_cocycle(s: PrefixMap, d) -> PrefixMap:
    """``sigma(s d)^-1 s sigma(d)``, an element of F."""
    _require_T(s)
    d = _point(d)
    return compose(invert(sigma(apply_dyadic(s, d))), compose(s, sigma(d)))


@lru_cache(maxsize=65536)
def _cocycle_ab(s: PrefixMap, d: DyadicPoint) -> SlopePair:
    return abelianization(estar_cocycle(s, d))


def act_TFF(s: PrefixMap, c: CosetTFF) -> CosetTFF:
    _require_T(s)
    return CosetTFF(apply_dyadic(s, c.point), SlopePair(*c.ab) + _cocycle_ab(s, c.point))


def mu_N_cosets(N: int) -> Callable[[EPWord], FiniteMeasure]:
    """``mu_N`` read as a map into probability measures on T/F."""
    return lambda x: pushforward(CosetTF, mu_N(x, N))


def constant_folner(n: int) -> Callable[[EPWord], FiniteMeasure]:
    box = folner_box(n)
    return lambda x: box


def ext_compose(eta, nu, x: EPWord) -> FiniteMeasure:
    """``sum_a eta^x(a) sigma(a) nu^{sigma(a)^-1 x}`` as a measure on T/[F,F]."""
    parts = []
    for a, w in eta(x).items():
        a = _point(a)
        y = apply_seq(invert(sigma(a)), x)
        parts.append((w, pushforward(lambda m, a=a: CosetTFF(a, m), nu(y))))
    return FiniteMeasure.mixture(parts)


@dataclass(frozen=True)
class ExtDefect:
    total_defect: Fraction
    eta_defect: Fraction
    nu_defect: Fraction

    @property
    def telescoping_ok(self) -> bool:
        return self.total_defect <= self.eta_defect + self.nu_defect

    def __iter__(self):
        return iter((self.total_defect, self.eta_defect, self.nu_defect))


def ext_defect(s: PrefixMap, x: EPWord, N: int, n: int, eta=None, nu=None) -> ExtDefect:
    """Defect of the composed map split into its two sources.

    ``eta`` and ``nu`` default to ``mu_N`` on T/F and the constant Følner
    box of radius ``n``.  The nu term is the worst translation defect
    ``|| c nu^y - nu^{c y} ||`` over the cocycles ``c`` met on the support
    of ``eta^x``.
    """
    _require_T(s)
    eta = eta if eta is not None else mu_N_cosets(N)
    nu = nu if nu is not None else constant_folner(n)
    sx = apply_seq(s, x)

    moved = pushforward(lambda c: act_TFF(s, c), ext_compose(eta, nu, x))
    total = l1_distance(moved, ext_compose(eta, nu, sx))

    eta_moved = pushforward(lambda c: act_TF(s, c), eta(x))
    eta_d = l1_distance(eta_moved, eta(sx))

    nu_d = Fraction(0)
    for a in eta(x):
        a = _point(a)
        sa = apply_dyadic(s, a)
        y = apply_seq(invert(sigma(a)), x)
        y_moved = apply_seq(invert(sigma(sa)), sx)
        shift_by = _cocycle_ab(s, a)
        nu_d = max(nu_d, l1_distance(translate(shift_by, nu(y)), nu(y_moved)))
    return ExtDefect(total, eta_d, nu_d)

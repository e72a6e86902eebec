"""Finite binary words, dyadic points and eventually periodic sequences.

Finite words are plain ``str`` objects over ``"01"``; the empty string is
the empty word and stands for the whole Cantor space.  Rationals are
:class:`fractions.Fraction`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidWord

__all__ = [
    "check_word",
    "psi",
    "phi",
    "DyadicPoint",
    "EPWord",
    "canonical_dyadic",
    "head",
    "shift",
    "prepend",
    "value",
    "parse_rational",
    "format_rational",
]

_BITS = frozenset("01")
_EP_RE = re.compile(r"^([01]*)\(([01]+)\)$")


def check_word(w: str) -> str:
    if not isinstance(w, str) or not _BITS.issuperset(w):
        raise InvalidWord(f"not a binary word: {w!r}")
    return w


def psi(w: str) -> Fraction:
    """Left endpoint of the dyadic interval coded by ``w``.

    >>> psi("101")
    Fraction(5, 8)
    """
    check_word(w)
    if not w:
        return Fraction(0)
    return Fraction(int(w, 2), 1 << len(w))


def _primitive_root(p: str) -> str:
    n = len(p)
    for d in range(1, n + 1):
        if n % d == 0 and p[:d] * (n // d) == p:
            return p[:d]
    return p


@dataclass(frozen=True, order=True)
class DyadicPoint:
    """The sequence ``word + 0^inf``, stored with trailing zeros stripped."""

    word: str = ""

    def __post_init__(self):
        check_word(self.word)
        object.__setattr__(self, "word", self.word.rstrip("0"))

    @property
    def theta(self) -> Fraction:
        return psi(self.word)

    @property
    def sequence(self) -> EPWord:
        return EPWord(self.word, "0")

    def __str__(self):
        return f"{self.word}(0)"

    @classmethod
    def parse(cls, text: str) -> DyadicPoint:
        x = EPWord.parse(text)
        if x.period != "0":
            raise InvalidWord(f"not a dyadic point: {text!r}")
        return cls(x.preperiod)


def canonical_dyadic(w: str) -> DyadicPoint:
    return DyadicPoint(w)


@dataclass(frozen=True, order=True)
class EPWord:
    """Eventually periodic sequence ``preperiod + period^inf``.

    The stored form is canonical (primitive period, shortest preperiod), so
    two instances are equal exactly when they denote the same sequence.
    """

    preperiod: str
    period: str

    def __post_init__(self):
        pre, per = check_word(self.preperiod), check_word(self.period)
        if not per:
            raise InvalidWord("period must be nonempty")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text: str) -> EPWord:
        m = _EP_RE.match(text.strip())
        if m is None:
            raise InvalidWord(f"expected 'u(p)', got {text!r}")
        return cls(m.group(1), m.group(2))

    def __str__(self):
        return f"{self.preperiod}({self.period})"

    @property
    def is_dyadic(self) -> bool:
        return self.period == "0"

    def __getitem__(self, i: int) -> str:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]


def head(x: EPWord, n: int) -> str:
    """First ``n`` letters of ``x``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pre, per = x.preperiod, x.period
    if n <= len(pre):
        return pre[:n]
    rest = n - len(pre)
    return pre + per * (rest // len(per)) + per[: rest % len(per)]


def shift(x: EPWord, n: int) -> EPWord:
    """Drop the first ``n`` letters of ``x``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    pre, per = x.preperiod, x.period
    if n <= len(pre):
        return EPWord(pre[n:], per)
    r = (n - len(pre)) % len(per)
    return EPWord("", per[r:] + per[:r])


def prepend(w: str, x: EPWord) -> EPWord:
    return EPWord(check_word(w) + x.preperiod, x.period)


def value(x: EPWord) -> Fraction:
    """Sum of ``x_n 2^-n``, in closed form."""
    per = x.period
    tail = Fraction(int(per, 2), (1 << len(per)) - 1)
    return psi(x.preperiod) + tail / (1 << len(x.preperiod))


def phi(theta) -> EPWord:
    """Binary expansion of a rational in [0, 1), never ending in 1^inf.

    >>> str(phi(Fraction(1, 3)))
    '(01)'
    """
    theta = Fraction(theta)
    if not 0 <= theta < 1:
        raise ValueError(f"theta must lie in [0, 1), got {theta}")
    den = theta.denominator
    r = theta.numerator
    seen: dict[int, int] = {}
    bits = []
    while r not in seen:
        seen[r] = len(bits)
        r *= 2
        if r >= den:
            bits.append("1")
            r -= den
        else:
            bits.append("0")
    start = seen[r]
    return EPWord("".join(bits[:start]), "".join(bits[start:]))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"

"""Finitely supported probability measures with exact rational weights.

Also holds the prefix-averaging maps ``mu_N`` from the Cantor space into
probability measures on the dyadic points, their exact equivariance
defects, and Følner boxes on Z^2.
"""
from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable

import numpy as np

from .errors import CapExceeded
from .thompson import PrefixMap, apply_dyadic, apply_seq, k_of
from .words import DyadicPoint, EPWord, format_rational, head

__all__ = [
    "FiniteMeasure",
    "DefectReport",
    "l1_distance",
    "pushforward",
    "mu_N",
    "defect_at",
    "sup_defect",
    "sampled_sup_defect",
    "random_epword",
    "folner_box",
    "folner_defect",
    "translate",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 26


class FiniteMeasure(Mapping):
    """Probability measure on a finite support, weights are Fractions.

    Built from a mapping or an iterable of ``(key, weight)`` pairs;
    repeated keys have their weights summed.  Zero weights are dropped.
    """

    __slots__ = ("_w",)

    def __init__(self, weights):
        items = weights.items() if isinstance(weights, Mapping) else weights
        acc: dict = {}
        for key, w in items:
            acc[key] = acc.get(key, 0) + Fraction(w)
        for key, w in list(acc.items()):
            if w < 0:
                raise ValueError(f"negative weight {w} at {key!r}")
            if w == 0:
                del acc[key]
        if sum(acc.values()) != 1:
            raise ValueError(f"total mass {sum(acc.values())} != 1")
        self._w = acc

    @classmethod
    def dirac(cls, key) -> FiniteMeasure:
        return cls({key: 1})

    @classmethod
    def uniform(cls, keys: Iterable[Hashable]) -> FiniteMeasure:
        keys = list(keys)
        w = Fraction(1, len(keys))
        return cls((k, w) for k in keys)

    @classmethod
    def mixture(cls, parts: Iterable[tuple[Fraction, FiniteMeasure]]) -> FiniteMeasure:
        return cls((k, c * w) for c, m in parts for k, w in m.items())

    def __getitem__(self, key) -> Fraction:
        return self._w[key]

    def __iter__(self):
        return iter(self._w)

    def __len__(self):
        return len(self._w)

    def weight(self, key) -> Fraction:
        return self._w.get(key, Fraction(0))

    def __repr__(self):
        body = ", ".join(f"{k}: {format_rational(w)}" for k, w in sorted(self._w.items(), key=lambda kv: str(kv[0])))
        return f"FiniteMeasure({{{body}}})"


def l1_distance(m1: Mapping, m2: Mapping) -> Fraction:
    keys = set(m1) | set(m2)
    return sum((abs(m1.get(k, 0) - m2.get(k, 0)) for k in keys), Fraction(0))


def pushforward(f: Callable, m: FiniteMeasure) -> FiniteMeasure:
    return FiniteMeasure((f(k), w) for k, w in m.items())


def mu_N(x: EPWord, N: int) -> FiniteMeasure:
    """Average of the Dirac masses at ``x[:j] 0^inf`` for j = 1..N."""
    if N < 1:
        raise ValueError("N must be positive")
    w = Fraction(1, N)
    prefix = head(x, N)
    return FiniteMeasure((DyadicPoint(prefix[:j]), w) for j in range(1, N + 1))


def defect_at(s: PrefixMap, x: EPWord, N: int) -> Fraction:
    """``|| s mu_N(x) - mu_N(s x) ||_1``, exactly."""
    moved = pushforward(lambda d: apply_dyadic(s, d), mu_N(x, N))
    return l1_distance(moved, mu_N(apply_seq(s, x), N))


@dataclass(frozen=True)
class DefectReport:
    group_element: PrefixMap
    N: int
    k: int
    sup_defect: Fraction
    bound: Fraction
    witness_prefix: str
    exact: bool = True

    @property
    def holds(self) -> bool:
        return self.sup_defect <= self.bound

    def to_dict(self, name: str | None = None) -> dict:
        return {
            "element": name if name is not None else str(self.group_element),
            "N": self.N,
            "k": self.k,
            "sup_defect": format_rational(self.sup_defect),
            "bound": format_rational(self.bound),
            "witness": self.witness_prefix,
            "mode": "exact" if self.exact else "estimate",
            "pass": self.holds,
        }


def _dyadic_image(s: PrefixMap):
    table, depth = s.table, s.depth

    def image(prefix: str) -> str:
        q = prefix.ljust(depth, "0")
        w = s.domain_prefix_of(q)
        return (table[w] + q[len(w):]).rstrip("0")

    return image


def sup_defect(s: PrefixMap, N: int, cap: int = DEFAULT_CAP) -> DefectReport:
    """Exact supremum over x of ``defect_at(s, x, N)``.

    Both measures depend only on the first ``L = N + k(s)`` letters of x,
    so the defect is constant on length-L cylinders.  The cylinder tree is
    walked depth-first with a signed atom count updated incrementally, and
    a subtree is collapsed as soon as every atom on both sides is fixed.
    The witness is the lexicographically least maximising length-L prefix.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if cap > DEFAULT_CAP:
        raise ValueError(f"cap may not exceed {DEFAULT_CAP}")
    k = k_of(s)
    L = N + k
    if L > cap:
        raise CapExceeded(f"cylinder length {L} exceeds cap {cap}")
    table = s.table
    image = _dyadic_image(s)
    delta: dict[str, int] = {}
    state = {"total": 0, "best": -1, "witness": ""}

    def bump(key: str, sign: int) -> None:
        old = delta.get(key, 0)
        new = old + sign
        state["total"] += abs(new) - abs(old)
        if new:
            delta[key] = new
        else:
            del delta[key]

    def visit(p: str, nb: int, pair) -> None:
        d = len(p)
        added = []
        if 1 <= d <= N:
            a = image(p)
            bump(a, 1)
            added.append((a, 1))
        if pair is None and p in table:
            pair = (p, table[p])
        if pair is not None:
            w, z = pair
            sx = z + p[len(w):]
            avail = min(N, len(sx))
            while nb < avail:
                nb += 1
                b = sx[:nb].rstrip("0")
                bump(b, -1)
                added.append((b, -1))
        if (d >= N and nb == N) or d == L:
            if state["total"] > state["best"]:
                state["best"] = state["total"]
                state["witness"] = p + "0" * (L - d)
        else:
            visit(p + "0", nb, pair)
            visit(p + "1", nb, pair)
        for key, sign in reversed(added):
            bump(key, -sign)

    visit("", 0, None)
    return DefectReport(
        group_element=s,
        N=N,
        k=k,
        sup_defect=Fraction(state["best"], N),
        bound=Fraction(4 * k, N),
        witness_prefix=state["witness"],
    )


def random_epword(rng: np.random.Generator) -> EPWord:
    """Preperiod length uniform on [0, 12], period length on [1, 6]."""
    pre_len = int(rng.integers(0, 13))
    per_len = int(rng.integers(1, 7))
    bits = rng.integers(0, 2, size=pre_len + per_len)
    text = "".join("1" if b else "0" for b in bits)
    return EPWord(text[:pre_len], text[pre_len:])


def sampled_sup_defect(s: PrefixMap, N: int, samples: int, rng_seed: int) -> Fraction:
    """Max of ``defect_at`` over seeded random points; 0 when samples == 0."""
    rng = np.random.default_rng(rng_seed)
    best = Fraction(0)
    for _ in range(samples):
        best = max(best, defect_at(s, random_epword(rng), N))
    return best


def folner_box(n: int) -> FiniteMeasure:
    """Uniform measure on the integer points of [-n, n]^2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    side = range(-n, n + 1)
    return FiniteMeasure.uniform(itertools.product(side, side))


def translate(a, m: FiniteMeasure) -> FiniteMeasure:
    a1, a2 = a
    return pushforward(lambda p: (p[0] + a1, p[1] + a2), m)


def folner_defect(a, n: int) -> Fraction:
    """``|| a + box(n) - box(n) ||_1`` in closed form."""
    side = 2 * n + 1
    overlap = max(0, side - abs(a[0])) * max(0, side - abs(a[1]))
    return 2 * (1 - Fraction(overlap, side * side))

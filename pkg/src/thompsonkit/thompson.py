"""Thompson's groups F < T < V as prefix-replacement tables.

An element is a bijection between two complete prefix codes; it acts on
the Cantor space by ``w x -> z x`` and on [0, 1) by the corresponding
piecewise linear map.  Tables are always kept in reduced form, which is a
normal form: two tables denote the same element iff they are identical.
"""
from __future__ import annotations

import json
import re
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import ArityMismatch, IncompleteCode, InvalidWord, NotInF, NotPrefixFree
from .words import DyadicPoint, EPWord, check_word, head, phi, prepend, psi, shift

__all__ = [
    "A",
    "B",
    "PrefixMap",
    "SlopePair",
    "validate",
    "from_codes",
    "compose",
    "invert",
    "identity",
    "apply_seq",
    "apply_dyadic",
    "circle_apply",
    "pair_at",
    "approach_from_below",
    "is_in_T",
    "is_in_F",
    "k_of",
    "slope_exponents",
    "abelianization",
    "rot",
    "generators",
    "parse_word",
    "load_element",
    "dump_element",
    "random_element",
]


class SlopePair(NamedTuple):
    """log2 of the one-sided slopes at a point: from above, from below."""

    right_exp: int
    left_exp: int

    def __add__(self, other):
        return SlopePair(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other):
        return SlopePair(self[0] - other[0], self[1] - other[1])

    def __neg__(self):
        return SlopePair(-self[0], -self[1])


def _check_code(words: list[str], side: str) -> None:
    ordered = sorted(words)
    for a, b in zip(ordered, ordered[1:]):
        # in sorted order a prefix is always adjacent to one of its extensions
        if b.startswith(a):
            raise NotPrefixFree(f"{side} words {a!r} and {b!r} are not prefix-incomparable")
    depth = max(len(w) for w in words)
    if sum(1 << (depth - len(w)) for w in words) != 1 << depth:
        raise IncompleteCode(f"{side} code {ordered} has Kraft sum != 1")


def _reduce(table: dict[str, str]) -> dict[str, str]:
    work = list(table)
    while work:
        d = work.pop()
        if not d or d not in table:
            continue
        parent = d[:-1]
        lo, hi = parent + "0", parent + "1"
        if lo in table and hi in table:
            rl, rh = table[lo], table[hi]
            if rl and rh and rl[-1] == "0" and rh[-1] == "1" and rl[:-1] == rh[:-1]:
                del table[lo], table[hi]
                table[parent] = rl[:-1]
                work.append(parent)
    return table


@dataclass(frozen=True)
class PrefixMap:
    """Element of V.  ``pairs`` is sorted by domain word after construction.

    Construction validates both codes and reduces the table, so any
    ``PrefixMap`` instance is a valid reduced element.
    """

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        pairs = self.pairs.items() if isinstance(self.pairs, Mapping) else self.pairs
        items = []
        for p in pairs:
            p = tuple(p)
            if len(p) != 2:
                raise ArityMismatch(f"expected a (domain, range) pair, got {p!r}")
            items.append((check_word(p[0]), check_word(p[1])))
        if not items:
            raise IncompleteCode("empty table")
        _check_code([w for w, _ in items], "domain")
        _check_code([z for _, z in items], "range")
        table = _reduce(dict(items))
        object.__setattr__(self, "pairs", tuple(sorted(table.items())))

    @cached_property
    def table(self) -> dict[str, str]:
        return dict(self.pairs)

    @cached_property
    def domain(self) -> list[str]:
        return [w for w, _ in self.pairs]

    @cached_property
    def depth(self) -> int:
        return max(len(w) for w in self.domain)

    def domain_prefix_of(self, z: str) -> str | None:
        """The domain word that is a prefix of ``z``, if any."""
        table = self.table
        for i in range(min(len(z), self.depth) + 1):
            if z[:i] in table:
                return z[:i]
        return None

    def __mul__(self, other: PrefixMap) -> PrefixMap:
        return compose(self, other)

    def __invert__(self) -> PrefixMap:
        return invert(self)

    def __pow__(self, n: int) -> PrefixMap:
        base = self if n >= 0 else invert(self)
        out = identity()
        for _ in range(abs(n)):
            out = compose(out, base)
        return out

    def __str__(self):
        return "{" + ", ".join(f"{w or 'ε'}->{z or 'ε'}" for w, z in self.pairs) + "}"

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}


def validate(pairs) -> PrefixMap:
    return PrefixMap(pairs)


def from_codes(domain: Iterable[str], range_: Iterable[str]) -> PrefixMap:
    domain, range_ = list(domain), list(range_)
    if len(domain) != len(range_):
        raise ArityMismatch(f"domain has {len(domain)} words, range has {len(range_)}")
    return PrefixMap(tuple(zip(domain, range_)))


def identity() -> PrefixMap:
    return PrefixMap((("", ""),))


def compose(t: PrefixMap, s: PrefixMap) -> PrefixMap:
    """The table of ``t o s`` (apply ``s`` first)."""
    tdom = t.domain
    out = []
    for w, z in s.pairs:
        d = t.domain_prefix_of(z)
        if d is not None:
            out.append((w, t.table[d] + z[len(d):]))
            continue
        # z is a proper prefix of a block of t's domain words
        i = bisect_left(tdom, z)
        while i < len(tdom) and tdom[i].startswith(z):
            d = tdom[i]
            out.append((w + d[len(z):], t.table[d]))
            i += 1
    return PrefixMap(tuple(out))


def invert(s: PrefixMap) -> PrefixMap:
    return PrefixMap(tuple((z, w) for w, z in s.pairs))


def pair_at(s: PrefixMap, x: EPWord) -> tuple[str, str]:
    """The table pair whose domain cylinder contains ``x``."""
    table = s.table
    for i in range(s.depth + 1):
        w = head(x, i)
        if w in table:
            return w, table[w]
    raise AssertionError("complete prefix code must cover every sequence")


def apply_seq(s: PrefixMap, x: EPWord) -> EPWord:
    w, z = pair_at(s, x)
    return prepend(z, shift(x, len(w)))


def apply_dyadic(s: PrefixMap, d: DyadicPoint) -> DyadicPoint:
    return DyadicPoint(apply_seq(s, d.sequence).preperiod)


def circle_apply(s: PrefixMap, theta) -> Fraction:
    """The piecewise linear map of [0, 1) evaluated at a rational."""
    theta = Fraction(theta)
    w, z = pair_at(s, phi(theta))
    return psi(z) + (theta - psi(w)) * Fraction(2) ** (len(w) - len(z))


def _ranges_in_domain_order(s: PrefixMap) -> list[str]:
    return [z for _, z in s.pairs]


def is_in_T(s: PrefixMap) -> bool:
    """At most one cyclic descent among range words taken in domain order."""
    r = _ranges_in_domain_order(s)
    n = len(r)
    descents = sum(1 for i in range(n) if r[i] > r[(i + 1) % n])
    return descents <= 1


def is_in_F(s: PrefixMap) -> bool:
    r = _ranges_in_domain_order(s)
    return all(a < b for a, b in zip(r, r[1:]))


def k_of(s: PrefixMap) -> int:
    return max(max(len(w), len(z) - len(w)) for w, z in s.pairs)


def approach_from_below(x: DyadicPoint) -> EPWord:
    # sequence approaching x from below on the circle; 0 is approached from 1^-
    if not x.word:
        return EPWord("", "1")
    return EPWord(x.word[:-1] + "0", "1")


def slope_exponents(s: PrefixMap, x: DyadicPoint) -> SlopePair:
    """Exponents of the one-sided slopes of the circle map at ``x``."""
    wr, zr = pair_at(s, x.sequence)
    wl, zl = pair_at(s, approach_from_below(x))
    return SlopePair(len(wr) - len(zr), len(wl) - len(zl))


def abelianization(s: PrefixMap) -> SlopePair:
    """The homomorphism F -> Z^2 given by endpoint slopes; kernel [F, F]."""
    if not is_in_F(s):
        raise NotInF(f"{s} is not in F")
    return slope_exponents(s, DyadicPoint(""))


def rot(q) -> PrefixMap:
    """Rotation of the circle by a dyadic rational ``q``."""
    q = Fraction(q) % 1
    den = q.denominator
    if den & (den - 1):
        raise ValueError(f"rotation angle must be dyadic, got {q}")
    m = den.bit_length() - 1
    shift_by = q.numerator
    pairs = []
    for v in range(1 << m):
        w = format(v, f"0{m}b") if m else ""
        z = format((v + shift_by) % (1 << m), f"0{m}b") if m else ""
        pairs.append((w, z))
    return PrefixMap(tuple(pairs))


A = PrefixMap((("0", "00"), ("10", "01"), ("11", "1")))
B = PrefixMap((("0", "0"), ("10", "100"), ("110", "101"), ("111", "11")))


def generators() -> dict[str, PrefixMap]:
    return {"A": A, "B": B, "rot:1/2": rot(Fraction(1, 2)), "rot:1/4": rot(Fraction(1, 4))}


_TOKEN = re.compile(r"^(A|B|id|rot:(-?\d+)/(\d+)(?:\^(\d+))?)(?:\^(-?\d+))?$")


def _named(token: str) -> tuple[PrefixMap, int]:
    m = _TOKEN.match(token.strip())
    if m is None:
        raise InvalidWord(f"cannot parse generator {token!r}")
    name, num, den, den_exp, power = m.groups()
    if name == "A":
        g = A
    elif name == "B":
        g = B
    elif name == "id":
        g = identity()
    else:
        den = int(den) ** int(den_exp) if den_exp else int(den)
        if den == 0:
            raise InvalidWord(f"zero denominator in {token!r}")
        g = rot(Fraction(int(num), den))
    return g, int(power) if power is not None else 1


def parse_word(text: str) -> PrefixMap:
    """Evaluate a group word such as ``"A*B^-1*rot:1/2"``.

    The rightmost factor acts first.
    """
    out = identity()
    for token in text.split("*"):
        g, n = _named(token)
        out = compose(out, g ** n)
    return out


def load_element(source) -> PrefixMap:
    """Read an element from a JSON document, a path, or a mapping."""
    if isinstance(source, Mapping):
        doc = source
    else:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    return PrefixMap(tuple(tuple(p) for p in doc["pairs"]))


def dump_element(s: PrefixMap) -> str:
    return json.dumps(s.to_json())


def random_element(rng, length: int, names=("A", "B", "rot:1/2", "rot:1/4")) -> tuple[str, PrefixMap]:
    """A random group word of the given length over ``names`` and inverses.

    ``rng`` is a ``numpy.random.Generator``.  Returns the word and its value.
    """
    gens = generators()
    gens["id"] = identity()
    tokens = []
    out = identity()
    for _ in range(length):
        name = names[int(rng.integers(len(names)))]
        e = 1 if rng.integers(2) else -1
        tokens.append(name if e == 1 else f"{name}^-1")
        out = compose(out, gens[name] ** e)
    return "*".join(tokens) or "id", out

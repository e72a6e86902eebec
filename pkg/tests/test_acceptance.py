"""Acceptance criteria, one test per criterion.

Each ``criterion_*`` function returns ``(ok, detail)``.  Under pytest a
PASS/FAIL line per criterion is printed in the terminal summary; run the
file directly to get the same lines without pytest.
"""
import itertools
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import (
    SWAP,
    apply_point,
    oracle_cantor_defect,
    random_cantor_point,
    random_dyadic_point,
    random_F,
    random_rational,
    random_T,
    split_pair,
)
from thompsonkit.germs import (
    CantorGerm,
    cantor_bound,
    compose_germs,
    condition_ii_defect_cantor,
    condition_ii_defect_dyadic,
    germ_at,
    germ_equal,
    identity_germ,
    invariant_split,
    Part,
    phi_tilde,
    standard_germ_set,
)
from thompsonkit.measures import defect_at, folner_defect, random_epword, sup_defect
from thompsonkit.relam import ext_defect
from thompsonkit.thompson import (
    A,
    B,
    PrefixMap,
    abelianization,
    apply_seq,
    circle_apply,
    compose,
    identity,
    invert,
    k_of,
    rot,
)
from thompsonkit.words import DyadicPoint, EPWord, phi

SEED = 20240601
RESULTS: dict[int, tuple[bool, str]] = {}

HALF = rot(Fraction(1, 2))
QUARTER = rot(Fraction(1, 4))


def criterion_1():
    start = time.perf_counter()
    bad = []
    for name, s in (("A", A), ("B", B), ("rot:1/2", HALF), ("rot:1/4", QUARTER)):
        for N in (4, 8, 16):
            r = sup_defect(s, N)
            if N > 2 * k_of(s) and not r.holds:
                bad.append((name, N, r.sup_defect))
            if s is HALF and r.sup_defect != 0:
                bad.append((name, N, r.sup_defect))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    return ok, f"12 rows, {elapsed:.1f}s, violations={bad}"


def criterion_2():
    ones = EPWord("", "1")
    got = {N: defect_at(A, ones, N) for N in (4, 8, 16)}
    ok = all(d == Fraction(2, N) for N, d in got.items())
    return ok, ", ".join(f"N={N}: {d}" for N, d in got.items())


def brute_force(s, N):
    L = N + k_of(s)
    best, witness = Fraction(-1), None
    for bits in itertools.product("01", repeat=L):
        p = "".join(bits)
        d = defect_at(s, EPWord(p, "0"), N)
        if d > best:
            best, witness = d, p
    return best, witness


def criterion_3():
    rng = np.random.default_rng(SEED + 3)
    bad, cases = [], 0
    while cases < 50:
        s = random_T(rng, 6)
        k = k_of(s)
        if k + 1 > 14:
            continue
        N = int(rng.integers(1, 14 - k + 1))
        r = sup_defect(s, N)
        best, witness = brute_force(s, N)
        if (r.sup_defect, r.witness_prefix) != (best, witness):
            bad.append((str(s), N))
        cases += 1
    return not bad, f"{cases} cases, mismatches={bad}"


def criterion_4():
    rng = np.random.default_rng(SEED + 4)
    failures = 0
    e = identity()
    for _ in range(500):
        g, h, f = (random_T(rng) for _ in range(3))
        if rng.integers(2):
            g = compose(g, SWAP)
        x = random_epword(rng)
        checks = (
            compose(compose(f, g), h) == compose(f, compose(g, h)),
            compose(g, invert(g)) == e == compose(invert(g), g),
            PrefixMap(split_pair(g, rng)) == g,
            compose(compose(g, h), invert(h)) == g,
            apply_seq(compose(g, h), x) == apply_seq(g, apply_seq(h, x)),
        )
        failures += checks.count(False)
    return failures == 0, f"500 elements, failures={failures}"


def criterion_5():
    rng = np.random.default_rng(SEED + 5)
    bad = 0
    for _ in range(200):
        s, theta = random_T(rng), random_rational(rng)
        bad += phi(circle_apply(s, theta)) != apply_seq(s, phi(theta))
    return bad == 0, f"200 points, failures={bad}"


def criterion_6():
    rng = np.random.default_rng(SEED + 6)
    bad = []
    for _ in range(100):
        s, x = random_T(rng), random_epword(rng)
        N, n = int(rng.integers(1, 13)), int(rng.integers(0, 9))
        r = ext_defect(s, x, N, n)
        if not r.telescoping_ok:
            bad.append((str(s), str(x), N, n))
    for _ in range(10):
        x, N, n = random_epword(rng), int(rng.integers(1, 13)), int(rng.integers(0, 9))
        for s in (identity(), HALF):
            if ext_defect(s, x, N, n).total_defect != 0:
                bad.append((str(s), str(x), N, n))
    return not bad, f"100 random + 20 zero cases, failures={bad}"


def criterion_7():
    rng = np.random.default_rng(SEED + 7)
    bad = {"dyadic": 0, "cantor": 0, "phi_tilde": 0}
    for kind, draw in (("dyadic", random_dyadic_point), ("cantor", random_cantor_point)):
        for _ in range(200):
            g, h, x = random_T(rng), random_T(rng), draw(rng)
            lhs = germ_at(compose(g, h), x)
            rhs = compose_germs(germ_at(g, apply_point(h, x)), germ_at(h, x))
            bad[kind] += lhs != rhs
    checked = 0
    while checked < 100:
        theta = random_rational(rng)
        if invariant_split(theta) is Part.DYADIC:
            continue
        g, h = random_T(rng), random_T(rng)
        lhs = phi_tilde(compose(h, g), theta)
        rhs = compose_germs(phi_tilde(h, circle_apply(g, theta)), phi_tilde(g, theta))
        bad["phi_tilde"] += lhs != rhs
        checked += 1
    return not any(bad.values()), f"200+200 triples, 100 pairs, failures={bad}"


def criterion_8():
    rng = np.random.default_rng(SEED + 8)
    one, e = DyadicPoint(""), identity()
    bad_comm = 0
    for _ in range(100):
        f, g = random_F(rng), random_F(rng)
        c = compose(compose(f, g), compose(invert(f), invert(g)))
        bad_comm += not (abelianization(c) == (0, 0) and germ_equal(c, e, one))
    bad_other = found = 0
    while found < 20:
        f = random_F(rng)
        if abelianization(f) == (0, 0):
            continue
        found += 1
        bad_other += germ_equal(f, e, one) or germ_at(f, one) == identity_germ(one)
    return bad_comm == bad_other == 0, f"commutator failures={bad_comm}, non-commutator failures={bad_other}"


def criterion_9():
    bad = []
    for g in standard_germ_set():
        for n in (4, 8, 16, 32):
            if isinstance(g, CantorGerm):
                d = condition_ii_defect_cantor(g, n)
                if d != oracle_cantor_defect(g, n) or d > cantor_bound(g, n):
                    bad.append((str(g), n, d))
            else:
                d = condition_ii_defect_dyadic(g, n)
                if d != folner_defect(g.slopes, n):
                    bad.append((str(g), n, d))
    x = EPWord("", "01")
    seq = [condition_ii_defect_cantor(CantorGerm(x, 2, x), n) for n in (4, 8, 16, 32)]
    expected = [Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    ok = not bad and seq == expected
    return ok, f"(x,2,x) sequence {[str(v) for v in seq]}, failures={bad}"


CRITERIA = {
    1: ("theorem bound reproduction", criterion_1),
    2: ("pointwise defect at 1^inf", criterion_2),
    3: ("cylinder enumeration vs brute force", criterion_3),
    4: ("group laws on 500 elements", criterion_4),
    5: ("phi equivariance", criterion_5),
    6: ("ext telescoping", criterion_6),
    7: ("germ functoriality and phi_tilde", criterion_7),
    8: ("commutators and open stabilizer", criterion_8),
    9: ("condition (ii) decay", criterion_9),
}


def report_line(i: int) -> str:
    ok, detail = RESULTS[i]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {i}: {CRITERIA[i][0]} -- {detail}"


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i):
    RESULTS[i] = CRITERIA[i][1]()
    print(report_line(i))
    assert RESULTS[i][0], report_line(i)


if __name__ == "__main__":
    for i in sorted(CRITERIA):
        RESULTS[i] = CRITERIA[i][1]()
        print(report_line(i), flush=True)

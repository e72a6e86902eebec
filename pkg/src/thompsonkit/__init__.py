"""Exact computations with Thompson's groups F < T < V.

Prefix-replacement tables, approximately invariant measures on the dyadic
points, relative amenability through T/F and T/[F,F], and the groupoid of
germs of T acting on the circle.
"""
from .errors import *  # noqa: F401,F403
from .words import DyadicPoint, EPWord, canonical_dyadic, head, phi, prepend, psi, shift, value
from .thompson import (
    A,
    B,
    PrefixMap,
    SlopePair,
    abelianization,
    apply_dyadic,
    apply_seq,
    circle_apply,
    compose,
    generators,
    identity,
    invert,
    is_in_F,
    is_in_T,
    k_of,
    parse_word,
    rot,
    slope_exponents,
    validate,
)
from .measures import (
    DefectReport,
    FiniteMeasure,
    defect_at,
    folner_box,
    folner_defect,
    l1_distance,
    mu_N,
    pushforward,
    sampled_sup_defect,
    sup_defect,
)

__version__ = "0.1.0"

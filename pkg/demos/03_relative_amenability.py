"""
Composing through T/F and T/[F,F]
=================================

Measures on T/F (the dyadic points) are combined with Følner boxes on the
abelianization Z^2 of F to get measures on T/[F,F].  The defect of the
composite is bounded by the sum of the two ingredient defects.
"""
from fractions import Fraction

from thompsonkit import A, B, identity, rot
from thompsonkit.relam import CosetTFF, act_TFF, estar_cocycle, ext_defect, sigma
from thompsonkit.thompson import abelianization
from thompsonkit.words import DyadicPoint, EPWord

d = DyadicPoint("1")
print("sigma(1(0)) =", sigma(d))

# The cocycle sigma(s d)^-1 s sigma(d) lies in F, so it has an abelianization.
c = estar_cocycle(A, d)
print("cocycle of A at 1(0):", c, "ab =", abelianization(c))
print("A acting on 1(0)@(0,0):", act_TFF(A, CosetTFF(d, (0, 0))))

x = EPWord("", "1")
print()
print(f"{'s':8} {'N':>3} {'n':>3} {'eta':>8} {'nu':>8} {'total':>8}")
for name, s in (("id", identity()), ("rot 1/2", rot(Fraction(1, 2))), ("A", A), ("B", B)):
    for N, n in ((8, 4), (12, 8)):
        r = ext_defect(s, x, N, n)
        assert r.telescoping_ok
        print(f"{name:8} {N:>3} {n:>3} {str(r.eta_defect):>8} {str(r.nu_defect):>8} {str(r.total_defect):>8}")

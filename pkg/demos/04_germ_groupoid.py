"""
The groupoid of germs of T on the circle
========================================

At a dyadic point the germ of an element is remembered by its two one-sided
slopes.  Elsewhere it is a Cuntz-groupoid triple ``(y, k, x)``.  Fiber
measures on both parts have translation defects that decay like ``1/n``.
"""
from fractions import Fraction

from thompsonkit import A, B, compose, identity, invert
from thompsonkit.germs import (
    CantorGerm,
    cantor_bound,
    condition_ii_defect_cantor,
    condition_ii_defect_dyadic,
    dyadic_bound,
    germ_at,
    germ_equal,
    phi_tilde,
)
from thompsonkit.words import DyadicPoint, EPWord

zero = DyadicPoint("")
print("germ of A at 0:", germ_at(A, zero))
print("germ of A at 1/3:", phi_tilde(A, Fraction(1, 3)))

# Commutators of F are trivial near the endpoints.
c = compose(compose(A, B), compose(invert(A), invert(B)))
print("[A,B] trivial near 0:", germ_equal(c, identity(), zero))
print("A trivial near 0:", germ_equal(A, identity(), zero))

x = EPWord("", "01")
g = CantorGerm(x, 2, x)
print()
print("n   defect(x,2,x)  bound")
for n in (4, 8, 16, 32):
    print(f"{n:<3} {str(condition_ii_defect_cantor(g, n)):<14} {cantor_bound(g, n)}")

h = germ_at(A, zero)
print()
print("n   defect", h, " bound")
for n in (1, 2, 4, 8):
    print(f"{n:<3} {str(condition_ii_defect_dyadic(h, n)):<10} {dyadic_bound(h, n)}")

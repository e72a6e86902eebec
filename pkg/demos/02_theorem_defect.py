"""
Approximately invariant measures on the dyadic points
=====================================================

``mu_N(x)`` averages the Dirac masses at the truncations ``x[:j] 0^inf``.
For ``N > 2k(s)`` its equivariance defect under ``s`` is at most
``4k(s)/N``.  The supremum over x is computed exactly by walking cylinders.
"""
from fractions import Fraction

from thompsonkit import A, B, defect_at, mu_N, rot, sup_defect
from thompsonkit.words import EPWord

x = EPWord("", "1")
print("mu_4((1)) =", mu_N(x, 4))

# At 1^inf the defect of A telescopes to 2/N.
for N in (4, 8, 16):
    print(f"defect of A at (1), N={N}:", defect_at(A, x, N))

print()
print(f"{'element':8} {'N':>3} {'sup':>6} {'bound':>6}  witness")
for name, s in (("A", A), ("B", B), ("rot 1/2", rot(Fraction(1, 2))), ("rot 1/4", rot(Fraction(1, 4)))):
    for N in (4, 8, 16):
        r = sup_defect(s, N)
        print(f"{name:8} {N:>3} {str(r.sup_defect):>6} {str(r.bound):>6}  {r.witness_prefix}")

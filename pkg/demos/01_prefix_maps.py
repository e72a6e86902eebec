"""
Thompson's groups as prefix-replacement tables
==============================================

An element of V is a bijection between two complete prefix codes.  The
generators A and B of F, and the dyadic rotations of T, are built in.
"""
from fractions import Fraction

from thompsonkit import A, B, PrefixMap, compose, invert, is_in_F, is_in_T, k_of, rot
from thompsonkit.thompson import apply_seq, circle_apply, parse_word
from thompsonkit.words import EPWord, phi

print("A =", A)
print("B =", B)

# Tables are reduced on construction, so equality of tables is equality
# of elements.
split = PrefixMap({"00": "000", "01": "001", "10": "01", "11": "1"})
print("split table reduces to", split, "equal to A:", split == A)

# Composition applies the right factor first.
print("AB =", compose(A, B))
print("A^-1 =", invert(A))

# Membership and the constant k(s) from the theorem.
r = rot(Fraction(1, 4))
for name, s in (("A", A), ("B", B), ("rot 1/4", r)):
    print(f"{name:8} in T: {is_in_T(s)}  in F: {is_in_F(s)}  k = {k_of(s)}")

# Words in the generators, rightmost acting first.
w = parse_word("A*B^-1*rot:1/2")
print("A*B^-1*rot:1/2 =", w)

# The circle map and the Cantor map are compatible through phi.
theta = Fraction(1, 3)
print("phi(1/3) =", phi(theta))
print("phi(s.(1/3)) =", phi(circle_apply(w, theta)))
print("s.phi(1/3)    =", apply_seq(w, phi(theta)))
x = EPWord("", "01")
print("A^2 acting on (01):", apply_seq(compose(A, A), x))

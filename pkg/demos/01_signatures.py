"""
Signature functions of torus-knot combinations
==============================================

Signatures are exact step functions on (0, 1].  Adding knots adds the
functions, and the largest absolute value S bounds the four-genus from below.
"""

from fractions import Fraction

from projknot.cli import signature_svg
from projknot.knots import combo_signature, parse_combo, sharp_S

# one torus knot: a staircase climbing to m
f = combo_signature(parse_combo("T(2,7)"))
print("T(2,7):", f)

# a difference of torus knots oscillates
K = parse_combo("T(2,17) - 2*T(2,11)")
g = combo_signature(K)
for lo, hi, v in g.intervals():
    print(f"  ({lo}, {hi})  {v}")
print("S =", sharp_S(K))

# values at jumps are averages of the two sides
print("value at 1/17:", g(Fraction(1, 17)))

with open("signature.svg", "w") as fh:
    fh.write(signature_svg(g, title=str(K)))
print("wrote signature.svg")

"""
How far apart are T(2,2k+1) and T(2,2n+1)?
==========================================

The least genus of b*T(2,2n+1) - a*T(2,2k+1) grows linearly in n with slope
1/(2k+1).
"""

from fractions import Fraction

from projknot.metric import dbar_search

for k in (1, 2, 3):
    for n in (25, 50, 100, 200):
        res = dbar_search(k, n)
        ratio = Fraction(res.value, n)
        print(f"k={k} n={n:3d}  dbar={res.value:3d}  ratio={float(ratio):.4f}  "
              f"target={1 / (2 * k + 1):.4f}  argmins={res.argmins}")

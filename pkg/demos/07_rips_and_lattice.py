"""
Rips complexes and a lattice toy model
======================================

Sets of classes at mutual distance one span simplices.  The same chain
metric on Z + Z with the max norm is small enough to search completely.
"""

from projknot.knots import parse_combo
from projknot.metric import big_delta_interval, zz_chain, zz_delta
from projknot.rips import build_rips, twist_clique

rc = build_rips([parse_combo(s) for s in ("T(2,3)", "T(2,5)", "T(2,7)", "T(2,3) + T(2,5)")])
print("torus simplex:", [rc.labelled(s) for s in rc.maximal_simplices])

tc = twist_clique(range(1, 12))
print("twist knots W(1)..W(11) span a simplex of dimension", tc.dimension)

torus = build_rips([parse_combo(f"T(2,{q})") for q in range(3, 24, 2)])
print("maximal simplices among T(2,3)..T(2,23):")
for s in torus.maximal_simplices:
    print("  ", torus.labelled(s))

# Z + Z: distance between lines through (8,15) and (1,1)
print("delta:", zz_delta((8, 15), (1, 1)))
for a, b in zz_chain((8, 15), (1, 1), 15):
    print(f"  {a} -> {b}")

# restricting chains to the span of T(2,41) and T(2,91)
K41, K91 = parse_combo("T(2,41)"), parse_combo("T(2,91)")
# keep combos with a coefficient of +-1 so each has a signature witness
span = [a * K41 + b * K91 for a in (1, 2) for b in (-2, -1, 1, 2) if 1 in (a, abs(b))]
print("Delta inside the span:", big_delta_interval(41, 91, universe=span))
print("Delta through T(2,61):", big_delta_interval(41, 91, universe=[parse_combo("T(2,61)")]))

"""
Upper bounds from surgery schemas
=================================

Bands of the positive knots sit on top, bands of the negative ones on the
bottom.  Every surgery curve joins a top band to a bottom band and lowers the
genus by one.  The dynamic program finds the largest non-crossing family.
"""

from projknot.genus import g4_interval, max_surgeries, max_surgeries_bruteforce, upper_bound_g4
from projknot.knots import parse_combo

# a small case, checked against exhaustive search
print(max_surgeries([12], [4, 4])[0], max_surgeries_bruteforce([12], [4, 4])[0])

# two copies of T(2,33) against three of T(2,21)
count, schema = max_surgeries([16, 16], [10, 10, 10])
print("curves:", count, "runs:", schema.runs)
for top, ts, bottom, bs, n in schema.band_layout():
    print(f"  top block {top} bands {ts}..{ts + n - 1}  <->  bottom block {bottom} bands {bs}..{bs + n - 1}")

K = parse_combo("2*T(2,61) - 3*T(2,41)")
bound, schema = upper_bound_g4(K)
print(K, "upper bound", bound, "from", schema.curves, "curves")

# the signature meets it, so the genus is known exactly
gi = g4_interval(K)
print("interval", (gi.lower, gi.upper), "exact:", gi.exact)

"""
delta is not a metric
=====================

delta compares whole projective classes: the least genus of a cobordism
between any multiples aK and bJ.  Three torus knots show that it can break
the triangle inequality, which is why the chain distance Delta exists.
"""

from projknot.knots import KnotCombo
from projknot.metric import big_delta_interval, delta_certified

for x, y in [(41, 61), (61, 91), (41, 91)]:
    d = delta_certified(x, y)
    print(f"delta(T(2,{x}), T(2,{y})) = {d}  via {d.upper_certificate['combo']}")

# a two-step chain through T(2,61) is shorter than the direct route
D = big_delta_interval(41, 91, universe=[KnotCombo.torus(61)])
print("Delta =", D, "chain:", " -> ".join(D.upper_certificate["chain"]))
# signatures only give Delta >= 2 here; the true value lies in [2, 4]

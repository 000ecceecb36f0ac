"""
Balls of radius one
===================

Which torus knots sit at distance one from a given one?  The answer has a
short closed list, and the library checks it against direct computation.
"""

from projknot.knots import parse_combo
from projknot.metric import ball_classification, ball_radius_one, big_delta_interval, chain_witness_check

for q in (3, 5, 15, 25):
    m = (q - 1) // 2
    print(f"T(2,{q}):", [2 * v + 1 for v in ball_radius_one(m, 40)])

# T(2,5) and T(2,25) share no torus neighbour...
near5 = set(ball_classification(2, 30))
near25 = set(ball_classification(12, 30))
print("common torus neighbours:", near5 & near25)

# ...but a mixed class bridges them in two steps
mid = parse_combo("2*T(2,5) + T(2,15)")
for leg in chain_witness_check(5, 25, mid):
    print("leg", leg, leg.upper_certificate["combo"])
print("Delta(T(2,5), T(2,25)) =", big_delta_interval(5, 25))

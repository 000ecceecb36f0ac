"""
Projective classes in abelian groups
====================================

Two elements are related when they are multiples of a common element; the
classes are the equivalence classes this generates.
"""

from projknot.projective import (
    canonicalize,
    class_count,
    common_multiple_witness,
    equivalent,
    parse_element,
    parse_group,
    related_one_step,
)

G = parse_group("Z + Z2")
x, y = parse_element("(2;0)", G), parse_element("(1;1)", G)
print(G, x, y, "equivalent:", equivalent(G, x, y), "common multiple:", common_multiple_witness(G, x, y))

# in Z6 everything nonzero is one class, yet 2 and 3 share no nonzero multiple
Z6 = parse_group("Z6")
two, three = parse_element("(2)", Z6), parse_element("(3)", Z6)
print("Z6:", canonicalize(Z6, two), canonicalize(Z6, three), "one step:", related_one_step(Z6, two, three))

# the relation is not transitive
H = parse_group("Z + Z2 + Z2")
a, b, c = (parse_element(s, H) for s in ("(1;1,0)", "(1;0,1)", "(2;0,0)"))
print(related_one_step(H, a, c), related_one_step(H, b, c), related_one_step(H, a, b))

for text in ("Z2 + Z2", "Z2 + Z2 + Z2", "Z3 + Z3", "Z2 + Z2 + Z3"):
    print(text, "->", class_count(parse_group(text)), "classes")

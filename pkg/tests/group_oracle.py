"""Independent references for projective classes of abelian groups."""

from itertools import product

from sympy import factorint
from sympy.utilities.iterables import partitions

from projknot.projective import FgGroup, related_one_step


def abelian_groups_of_order(n):
    """Every abelian group of order n, as prime-power cyclic factors."""
    per_prime = []
    for p, e in factorint(n).items():
        choices = []
        for part in partitions(e):
            orders = []
            for size, mult in part.items():
                orders += [p**size] * mult
            choices.append(sorted(orders))
        per_prime.append(choices)
    for pick in product(*per_prime):
        yield FgGroup(0, tuple(q for orders in pick for q in orders))


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def finite_classes(G):
    """Partition of the nonzero elements of a finite group: x ~' y exactly
    when both lie in one cyclic subgroup, so the closure is the union of the
    cyclic subgroups' nonzero parts."""
    elems = [e for e in G.torsion_elements() if not e.is_zero()]
    uf = UnionFind(elems)
    for m in elems:
        x = m
        while not x.is_zero():
            uf.union(x, m)
            x = G.add(x, m)
    return uf


def boxed_classes(G, bound):
    """Closure of related_one_step, reported on the box of radius ``bound``.

    The closure is taken in a box enlarged by the torsion exponent e (at
    least 2), so the chain x ~' e*x ~' ... through free multiples is seen."""
    scale = max(2, G.exponent)
    elems = [e for e in G.elements_in_box(scale * bound) if not e.is_zero()]
    uf = UnionFind(elems)
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if uf.find(x) != uf.find(y) and related_one_step(G, x, y):
                uf.union(x, y)
    inner = [e for e in elems if max(map(abs, e.free_part), default=0) <= bound]
    return inner, uf


def same_partition(elems, uf, key):
    """True iff the union-find partition equals the partition by ``key``."""
    pairs = {}
    back = {}
    for e in elems:
        r, k = uf.find(e), key(e)
        if pairs.setdefault(r, k) != k or back.setdefault(k, r) != r:
            return False
    return True

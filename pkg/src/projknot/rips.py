"""Vietoris-Rips complexes at scale one over integer distance oracles.

A simplex is a set of pairwise distance-1 vertices, so the maximal
simplices are the maximal cliques of the distance-1 graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import DomainError
from .knots import TwistKnot, twist_jump_cosine
from .metric import delta_certified


@dataclass(frozen=True)
class RipsComplex:
    vertices: tuple
    edges: tuple  # index pairs (i, j), i < j
    maximal_simplices: tuple  # sorted index tuples
    excluded_pairs: tuple = ()  # pairs the oracle could not decide
    edge_labels: dict = field(default_factory=dict, compare=False)

    @property
    def dimension(self) -> int:
        if not self.maximal_simplices:
            return -1
        return max(len(s) for s in self.maximal_simplices) - 1

    def labelled(self, simplex):
        return [str(self.vertices[i]) for i in simplex]

    def to_json(self):
        return {
            "vertices": [str(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "maximal_simplices": [self.labelled(s) for s in self.maximal_simplices],
            "dimension": self.dimension,
            "excluded_pairs": [list(p) for p in self.excluded_pairs],
            "edge_labels": {f"{i}-{j}": lab for (i, j), lab in self.edge_labels.items()},
        }


def maximal_cliques(n: int, adj: dict[int, set[int]]):
    """Bron-Kerbosch with pivoting on the vertex set ``range(n)``."""
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return sorted(out)


def _default_oracle(u, v):
    d = delta_certified(u, v, cap=2)
    if d.exact:
        return d.lower
    if d.lower >= 2:
        return d.lower  # certainly not an edge
    return None


def build_rips(vertices, oracle=None) -> RipsComplex:
    """Rips complex at scale one.

    ``oracle(u, v)`` returns a certified integer distance or ``None`` when
    undecided; only the verdict "equal to one" matters.  Undecided pairs
    are left out of the graph and listed in ``excluded_pairs``.  The default
    oracle is the certified projective distance.
    """
    verts = tuple(vertices)
    oracle = oracle or _default_oracle
    adj = {i: set() for i in range(len(verts))}
    edges, excluded = [], []
    for i, j in combinations(range(len(verts)), 2):
        d = oracle(verts[i], verts[j])
        if d is None:
            excluded.append((i, j))
        elif d == 1:
            edges.append((i, j))
            adj[i].add(j)
            adj[j].add(i)
    simplices = maximal_cliques(len(verts), adj) if verts else []
    return RipsComplex(verts, tuple(edges), tuple(simplices), tuple(excluded))


def twist_clique(ns) -> RipsComplex:
    """The simplex spanned by twist knots W(n).

    Each W(n) unknots with one crossing change of the same sign, so
    W(m) # -W(n) has an immersed disk with two opposite-sign double points;
    tubing them away gives genus one.  That edge is taken as given.  The
    jump loci cos(theta_n) = 1 - 1/(2n) are distinct, so the classes differ.
    """
    ns = [int(n) for n in ns]
    if len(set(ns)) != len(ns):
        raise DomainError(f"duplicate twist parameters in {ns}")
    if any(n < 1 for n in ns):
        raise DomainError(f"twist parameters must be >= 1, got {ns}")
    verts = tuple(TwistKnot(n) for n in ns)
    cosines = [twist_jump_cosine(n) for n in ns]
    if len(set(cosines)) != len(cosines):
        raise AssertionError("jump cosines should separate twist knots")
    labels = {}
    adj = {i: set() for i in range(len(verts))}
    edges = []
    for i, j in combinations(range(len(verts)), 2):
        edges.append((i, j))
        adj[i].add(j)
        adj[j].add(i)
        labels[(i, j)] = f"axiom:crossing-change; lower:cos {cosines[i]} != {cosines[j]}"
    return RipsComplex(verts, tuple(edges), tuple(maximal_cliques(len(verts), adj)), (), labels)

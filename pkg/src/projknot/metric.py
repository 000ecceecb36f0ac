"""Projective distances between knot classes, and a Z+Z toy model.

``delta`` is the least cobordism distance between representatives of two
projective classes; ``Delta`` is its chain (path) metric.  For classes in
the span of T(2, 2m+1) knots both are bracketed by certified intervals:

* lower bounds use signatures.  When an integer-valued additive invariant
  takes the value 1 on K and on J, every representative of [K] is an integer
  multiple of K as far as signatures can see, so
  ``delta([K], [J]) >= min over a, b != 0 of S(aK - bJ)``;
* upper bounds come from explicit representatives aK and bJ together with
  a surgery schema (or closed form) bounding ``g4(aK - bJ)``.

The minimisation over (a, b) is made finite by enumerating exactly the
lattice points where every interval value of ``a*sigma'_K - b*sigma'_J``
stays within a known upper bound.
"""

from __future__ import annotations

import heapq
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import DomainError, PrimitivityError, UnsupportedGeneratorError
from .exactnum import ONE
from .genus import closed_form_b1, g4_interval
from .knots import KnotCombo, TorusKnot, combo_signature, first_jump_count, sharp_S
from .projective import primitive_vector


class NotCertifiedError(RuntimeError):
    """A quantity was requested exactly but only an interval is certified."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


# --- certified intervals -----------------------------------------------


@dataclass(frozen=True)
class DistInterval:
    lower: int
    upper: int | None  # None: unbounded within the search performed
    lower_certificate: dict = field(default_factory=dict, compare=False)
    upper_certificate: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise AssertionError(f"lower {self.lower} exceeds upper {self.upper}")

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def as_pair(self):
        return (self.lower, self.upper)

    def to_json(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "value": self.value,
            "certified": self.exact,
            "witnesses": {"lower": self.lower_certificate, "upper": self.upper_certificate},
        }

    def __str__(self):
        hi = "inf" if self.upper is None else self.upper
        return f"[{self.lower},{hi}]"


# --- primitivity witnesses ---------------------------------------------


@dataclass(frozen=True)
class Nu:
    """Integer-valued additive invariant ``sign * sigma'(t+)`` (mode
    ``"value"``) or ``sign * (sigma'(t+) - sigma'(t-))`` (mode ``"jump"``)."""

    t: Fraction
    mode: str = "value"
    sign: int = 1

    def __call__(self, combo: KnotCombo) -> int:
        f = combo_signature(combo)
        if self.mode == "value":
            v = f.value_right_of(self.t)
        elif self.mode == "jump":
            v = f.jump_at(self.t)
        else:
            raise ValueError(f"unknown mode {self.mode!r}")
        return self.sign * v

    def __str__(self):
        s = "" if self.sign > 0 else "-"
        if self.mode == "value":
            return f"{s}sigma'({self.t}+)"
        return f"{s}jump sigma'@{self.t}"


def find_nu(combo: KnotCombo) -> Nu:
    """Some signature invariant taking the value 1 on ``combo``."""
    f = combo_signature(combo)
    for lo, _hi, v in f.intervals():
        if abs(v) == 1:
            return Nu(lo, "value", v)
    for t in f.breakpoints:
        j = f.jump_at(t)
        if abs(j) == 1:
            return Nu(t, "jump", j)
    raise PrimitivityError(f"{combo}: no signature invariant takes the value 1")


@dataclass(frozen=True)
class ClassNode:
    combo: KnotCombo
    nu: Nu | None = None

    def __post_init__(self):
        if self.combo.has_twist():
            raise UnsupportedGeneratorError(f"{self.combo}: distances need torus-span combos")
        if self.combo.is_zero():
            raise PrimitivityError("the zero class has no primitivity witness")
        if self.nu is None:
            object.__setattr__(self, "nu", find_nu(self.combo))
        elif self.nu(self.combo) != 1:
            raise PrimitivityError(f"{self.nu} evaluates to {self.nu(self.combo)} on {self.combo}, not 1")

    @property
    def primitivity_witness(self) -> Nu:
        return self.nu

    @classmethod
    def torus(cls, crossings: int) -> "ClassNode":
        return cls(KnotCombo.torus(crossings))

    def __str__(self):
        return str(self.combo)


def as_node(x) -> ClassNode:
    if isinstance(x, ClassNode):
        return x
    if isinstance(x, KnotCombo):
        return ClassNode(x)
    if isinstance(x, int):
        return ClassNode.torus(x)
    raise TypeError(f"cannot make a class node from {x!r}")


def _single_torus(c: KnotCombo):
    if len(c.terms) == 1:
        g, coeff = c.terms[0]
        if isinstance(g, TorusKnot) and abs(coeff) == 1:
            return g.m
    return None


def _proportional(cx: KnotCombo, cy: KnotCombo) -> bool:
    if set(cx.generators()) != set(cy.generators()):
        return False
    dx, dy = cx.as_dict(), cy.as_dict()
    g0 = cx.generators()[0]
    return all(dx[g] * dy[g0] == dy[g] * dx[g0] for g in dx)


# --- lattice regions ----------------------------------------------------


def signature_rows(cx: KnotCombo, cy: KnotCombo) -> list[tuple[int, int]]:
    """Distinct pairs (sigma'_x, sigma'_y) over the common refinement."""
    fx, fy = combo_signature(cx), combo_signature(cy)
    cuts = sorted(set(fx.breakpoints) | set(fy.breakpoints))
    rows = {(fx.value_right_of(lo), fy.value_right_of(lo)) for lo in [Fraction(0)] + cuts}
    rows.discard((0, 0))
    return sorted(rows)


def lattice_region(rows, bound: int):
    """All (a, b) with a >= 1, b != 0 and ``|a*u - b*v| <= bound`` for every
    row (u, v), returned as ``(a, b, max_row |a*u - b*v|)``.

    Two rows with nonzero determinant D confine a to
    ``|a| <= bound*(|v1|+|v2|)/|D|``; for each such a the admissible b form an
    interval obtained exactly from every row.
    """
    rows = list(rows)
    best_det, pair = 0, None
    for i, (u1, v1) in enumerate(rows):
        for u2, v2 in rows[i + 1:]:
            d = abs(u1 * v2 - u2 * v1)
            if d > best_det:
                best_det, pair = d, ((u1, v1), (u2, v2))
    if pair is None:
        raise DomainError("signature rows are dependent; the region is unbounded")
    (_, v1), (_, v2) = pair
    a_max = (bound * (abs(v1) + abs(v2))) // best_det
    out = []
    for a in range(1, a_max + 1):
        lo, hi = -float("inf"), float("inf")
        ok = True
        for u, v in rows:
            if v == 0:
                if abs(a * u) > bound:
                    ok = False
                    break
                continue
            # |a*u - b*v| <= bound  <=>  b in [(a*u - bound)/v, (a*u + bound)/v] (sorted)
            p, q = Fraction(a * u - bound, v), Fraction(a * u + bound, v)
            if p > q:
                p, q = q, p
            lo, hi = max(lo, p), min(hi, q)
            if lo > hi:
                ok = False
                break
        if not ok:
            continue
        for b in range(ceil(lo), floor(hi) + 1):
            if b == 0:
                continue
            s = max(abs(a * u - b * v) for u, v in rows)
            out.append((a, b, s))
    return out


# --- delta --------------------------------------------------------------


def _upper_for(combo: KnotCombo):
    gi = g4_interval(combo)
    return gi.upper, gi


def _upper_cert(a, b, combo, gi):
    w = gi.upper_witness
    return {
        "kind": gi.upper_kind,
        "pair": [a, b],
        "combo": str(combo),
        "schema": w.to_json() if hasattr(w, "to_json") else None,
        "tag": w if isinstance(w, str) else None,
    }


def _map(fn, items, workers):
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, items))
    return [fn(it) for it in items]


def _seed_pairs(x: ClassNode, y: ClassNode, rows):
    seeds = set()
    mx, my = _single_torus(x.combo), _single_torus(y.combo)
    if mx is not None and my is not None and mx != my:
        k, n = sorted((mx, my))
        alpha = (2 * n + 1) // (2 * k + 1)
        for a in (alpha, alpha + 1):
            # combination T_n - a*T_k written as a*x - b*y with a >= 1
            if mx == k:
                seeds.add((a, 1))
            else:
                seeds.add((1, a))
    small = []
    for a in range(1, 5):
        for b in list(range(1, 5)) + list(range(-4, 0)):
            s = max(abs(a * u - b * v) for u, v in rows)
            small.append((s, a + abs(b), a, b))
    small.sort()
    seeds.update((a, b) for _, _, a, b in small[:3])
    return sorted(seeds)


def _reorient(pair):
    a, b = pair[1], pair[0]
    return (a, b) if a > 0 else (-a, -b)


def delta_certified(x, y, *, cap: int | None = None, workers: int = 1) -> DistInterval:
    """Certified interval for ``delta([x], [y])``.

    With ``cap`` set, upper-bound refinement stops once the lower bound
    reaches ``cap`` (the result is still a valid interval).
    """
    x, y = as_node(x), as_node(y)
    if _proportional(x.combo, y.combo):
        cert = {"kind": "same-class", "combo_x": str(x.combo), "combo_y": str(y.combo)}
        return DistInterval(0, 0, cert, cert)
    # fix an orientation so that delta(x, y) and delta(y, x) run the same search
    flip = (str(x.combo), str(y.combo)) > (str(y.combo), str(x.combo))
    if flip:
        x, y = y, x
    rows = signature_rows(x.combo, y.combo)

    def combo_of(a, b):
        return a * x.combo - b * y.combo

    seeds = _seed_pairs(x, y, rows)
    seed_uppers = _map(_upper_for, [combo_of(a, b) for a, b in seeds], workers)
    best, best_cert = None, None
    for (a, b), (u, gi) in zip(seeds, seed_uppers):
        if best is None or u < best:
            best, best_cert = u, _upper_cert(a, b, combo_of(a, b), gi)
    region = lattice_region(rows, best)
    region.sort(key=lambda r: (r[2], r[0] + abs(r[1]), r[0], r[1]))
    lower = region[0][2]
    lower_pair = region[0][:2]
    pending = [r for r in region if r[2] < best]
    while pending and pending[0][2] < best and (cap is None or lower < cap):
        s0 = pending[0][2]
        batch = [r for r in pending if r[2] == s0]
        pending = [r for r in pending if r[2] != s0]
        results = _map(_upper_for, [combo_of(a, b) for a, b, _ in batch], workers)
        for (a, b, _), (u, gi) in zip(batch, results):
            if u < best:
                best, best_cert = u, _upper_cert(a, b, combo_of(a, b), gi)
        pending = [r for r in pending if r[2] < best]
    if flip:
        # a*y - b*x is the mirror of b*x - a*y
        x, y = y, x
        lower_pair = _reorient(lower_pair)
        a, b = _reorient(best_cert["pair"])
        best_cert = dict(best_cert, pair=[a, b], combo=str(a * x.combo - b * y.combo))
    lower_cert = {
        "kind": "signature",
        "nu_x": str(x.nu),
        "nu_y": str(y.nu),
        "min_S_pair": list(lower_pair),
        "search_bound": max(r[2] for r in region),
        "region_size": len(region),
    }
    return DistInterval(lower, best, lower_cert, best_cert)


# --- dbar for pairs of torus knots --------------------------------------


@dataclass
class DbarResult:
    k: int
    n: int
    value: int
    argmins: list[tuple[int, int]]
    all_certified: bool
    bound: int
    candidates: list[dict]

    def to_json(self):
        return {
            "value": self.value,
            "argmins": [list(p) for p in self.argmins],
            "certified": self.all_certified,
            "lower": min(c["lower"] for c in self.candidates),
            "upper": self.value,
            "witnesses": {"search_bound": self.bound, "candidates": len(self.candidates)},
        }


def dbar_candidates(k: int, n: int, bound: int):
    """Pairs (b, a), b > 0, that can give ``g4(b*T_n - a*T_k) <= bound``.

    Same-sign pairs need ``b*J1 <= bound`` (J1 = jumps of sigma'(T_n) below
    1/(2k+1), where sigma'(T_k) still vanishes) and ``|b*n - a*k| <= bound``
    (the value at t = 1); opposite-sign pairs need ``b*n + |a|*k <= bound``.
    """
    j1 = first_jump_count(k, n)
    out = []
    for b in range(1, bound // j1 + 1):
        for a in range(max(1, ceil(Fraction(b * n - bound, k))), floor(Fraction(b * n + bound, k)) + 1):
            out.append((b, a))
    for b in range(1, bound // n + 1):
        for a in range(1, (bound - b * n) // k + 1):
            out.append((b, -a))
    return out


def dbar_exclusion_certificate(k: int, n: int, b: int, a: int, bound: int):
    """For a pair outside :func:`dbar_candidates`, a point t with
    ``|sigma'(t)| > bound``; ``None`` if the pair is a candidate."""
    if b < 0:
        b, a = -b, -a
    f = combo_signature(b * KnotCombo({TorusKnot(n): 1}) - a * KnotCombo({TorusKnot(k): 1}))
    checks = [(ONE, f.interval_values[-1])]
    if a > 0:
        checks.append((Fraction(1, 2 * k + 1), f.value_left_of(Fraction(1, 2 * k + 1))))
    for t, v in checks:
        if abs(v) > bound:
            return t, v
    return None


def dbar_search(k: int, n: int, workers: int = 1) -> DbarResult:
    """Least ``g4(b*T(2,2n+1) - a*T(2,2k+1))`` over nonzero a, b."""
    if not (isinstance(k, int) and isinstance(n, int) and 0 < k < n):
        raise DomainError(f"need integers 0 < k < n, got k={k!r}, n={n!r}")
    v_alpha, v_next = closed_form_b1(k, n)
    bound = v_alpha if v_next is None else min(v_alpha, v_next)
    pairs = dbar_candidates(k, n, bound)
    Tn, Tk = KnotCombo({TorusKnot(n): 1}), KnotCombo({TorusKnot(k): 1})
    rows = []
    for b, a in pairs:
        c = b * Tn - a * Tk
        rows.append({"b": b, "a": a, "lower": sharp_S(c), "upper": None, "exact": False, "combo": c})
    # uppers only where they can matter: below the running best, plus the
    # closed-form pairs, which certify the seed value
    alpha = (2 * n + 1) // (2 * k + 1)
    best = bound
    todo = [r for r in rows if r["b"] == 1 and r["a"] in (alpha, alpha + 1)]
    todo += sorted((r for r in rows if r["lower"] < best and r not in todo), key=lambda r: r["lower"])
    while todo:
        batch = [r for r in todo if r["lower"] < best or (r["b"] == 1 and r["a"] in (alpha, alpha + 1))]
        batch = batch[: max(1, workers)]
        if not batch:
            break
        for r, gi in zip(batch, _map(g4_interval, [r["combo"] for r in batch], workers)):
            r["upper"], r["exact"] = gi.upper, gi.exact
            best = min(best, gi.upper)
        todo = [r for r in todo if r not in batch]
    for r in rows:
        del r["combo"]
    value = best
    argmins = [(r["b"], r["a"]) for r in rows if r["exact"] and r["upper"] == value]
    certified = bool(argmins) and all(r["exact"] or r["lower"] >= value for r in rows)
    return DbarResult(k, n, value, argmins, certified, bound, rows)


def growth_ratio(k: int, n: int) -> Fraction:
    """Certified dbar(T(2,2k+1), T(2,2n+1)) / n."""
    res = dbar_search(k, n)
    if not res.all_certified:
        raise NotCertifiedError(f"dbar({k}, {n}) is not certified exact")
    return Fraction(res.value, n)


# --- balls of radius one ------------------------------------------------


def ball_classification(m: int, m_max: int) -> list[int]:
    """Torus parameters at delta-distance one from m, by the closed list
    n in {k+1, 2k, 2k+1, 3k+1} above k (and the inverse relation below)."""
    up = {m + 1, 2 * m, 2 * m + 1, 3 * m + 1}
    down = {m - 1}
    if m % 2 == 0:
        down.add(m // 2)
    if m % 2 == 1:
        down.add((m - 1) // 2)
    if (m - 1) % 3 == 0:
        down.add((m - 1) // 3)
    return sorted(v for v in (up | down) if 1 <= v <= m_max and v != m)


def ball_radius_one(m: int, m_max: int, workers: int = 1) -> list[int]:
    """All m' <= m_max with delta([T(2,2m+1)], [T(2,2m'+1)]) = 1.

    Computed twice, by classification and by certified delta intervals; a
    disagreement or an undecided pair raises :class:`ConsistencyError`.
    """
    if m < 1 or m > m_max:
        raise DomainError(f"need 1 <= m <= m_max, got m={m}, m_max={m_max}")
    classified = ball_classification(m, m_max)
    direct = []
    for other in range(1, m_max + 1):
        if other == m:
            continue
        d = delta_certified(2 * m + 1, 2 * other + 1, cap=2, workers=workers)
        if d.lower >= 2:
            continue
        if not d.exact:
            raise ConsistencyError(f"delta(T{2*m+1}, T{2*other+1}) undecided: {d}")
        direct.append(other)
    if direct != classified:
        raise ConsistencyError(f"classification {classified} != direct {direct}")
    return direct


# --- Delta --------------------------------------------------------------


def default_universe(m_max: int = 30) -> list[ClassNode]:
    """T(2, 2m+1) for m <= m_max plus 2*T(2,N) + T(2,3N) for odd N with 3N
    inside that range."""
    nodes = [ClassNode(KnotCombo({TorusKnot(m): 1})) for m in range(1, m_max + 1)]
    top = 2 * m_max + 1
    for N in range(3, top // 3 + 1, 2):
        nodes.append(ClassNode(2 * KnotCombo.torus(N) + KnotCombo.torus(3 * N)))
    return nodes


def big_delta_interval(x, y, universe=None, workers: int = 1) -> DistInterval:
    """Certified interval for the chain metric Delta([x], [y]).

    The upper bound is a shortest path through ``universe`` (default
    :func:`default_universe`) over exactly certified delta edges.  The lower
    bound is 0 for equal classes and otherwise 1, raised to 2 when delta is
    certified >= 2; delta in {1, 2} makes Delta equal to delta.
    """
    x, y = as_node(x), as_node(y)
    direct = delta_certified(x, y, workers=workers)
    if direct.exact and direct.lower <= 2:
        cert = {"kind": "delta", "chain": [str(x.combo), str(y.combo)], "steps": [direct.lower]}
        return DistInterval(direct.lower, direct.lower, {"kind": "delta-exact", "delta": direct.as_pair()}, cert)
    lower = 2 if direct.lower >= 2 else 1
    nodes = [x, y]
    for u in universe if universe is not None else default_universe():
        u = as_node(u)
        if not any(_proportional(u.combo, v.combo) for v in nodes):
            nodes.append(u)
    # Dijkstra from x; edges evaluated lazily, pruned against the best path
    best = direct.upper if direct.exact else None
    best_path = [0, 1] if direct.exact else None
    dist = {0: 0}
    prev: dict[int, int] = {}
    weights: dict[tuple[int, int], int] = {}
    heap = [(0, 0)]
    done = set()
    while heap:
        d, i = heapq.heappop(heap)
        if i in done:
            continue
        done.add(i)
        if i == 1:
            if best is None or d < best:
                best = d
                path = [1]
                while path[-1] != 0:
                    path.append(prev[path[-1]])
                best_path = path[::-1]
            break
        for j in range(len(nodes)):
            if j in done:
                continue
            cap = None if best is None else best - d
            if cap is not None and cap <= 0:
                continue
            e = delta_certified(nodes[i], nodes[j], cap=cap, workers=workers)
            if not e.exact:
                continue
            w = e.lower
            weights[(i, j)] = w
            if d + w < dist.get(j, float("inf")):
                dist[j] = d + w
                prev[j] = i
                heapq.heappush(heap, (d + w, j))
    if best is None:
        return DistInterval(lower, None, {"kind": "delta-lower", "delta": direct.as_pair()},
                            {"kind": "unreachable"})
    steps = []
    for a, b in zip(best_path, best_path[1:]):
        steps.append(weights.get((a, b), direct.lower if (a, b) == (0, 1) else None))
    upper_cert = {"kind": "chain", "chain": [str(nodes[i].combo) for i in best_path], "steps": steps}
    lower = min(lower, best)
    return DistInterval(lower, best, {"kind": "delta-lower", "delta": direct.as_pair()}, upper_cert)


def chain_witness_check(x, y, middle) -> tuple[DistInterval, DistInterval]:
    """delta intervals for both legs x -> middle -> y."""
    return delta_certified(x, middle), delta_certified(middle, y)


# --- Z + Z with the max norm --------------------------------------------


def _prim2(p) -> tuple[int, int]:
    p = tuple(int(c) for c in p)
    if len(p) != 2 or p == (0, 0):
        raise DomainError(f"need a nonzero lattice point, got {p}")
    return primitive_vector(p)


def zz_delta(x, y) -> int:
    """min over nonzero s, t of max-norm |s*prim(x) - t*prim(y)|."""
    px, py = _prim2(x), _prim2(y)
    if px == py:
        return 0
    start = min(max(abs(px[0] - py[0]), abs(px[1] - py[1])),
                max(abs(px[0] + py[0]), abs(px[1] + py[1])))
    rows = [(px[0], py[0]), (px[1], py[1])]
    return min(s for _, _, s in lattice_region(rows, start))


def _zz_neighbours(p, bound):
    k = 1
    while max(abs(k * p[0]), abs(k * p[1])) <= bound:
        rep = (k * p[0], k * p[1])
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                q = (rep[0] + dx, rep[1] + dy)
                if (dx, dy) == (0, 0) or q == (0, 0) or max(abs(q[0]), abs(q[1])) > bound:
                    continue
                yield rep, q
        k += 1


def zz_chain(x, y, bound: int):
    """Shortest chain of unit max-norm steps between classes, using
    representatives with coordinates bounded by ``bound``.

    Returns a list of ``(from_rep, to_rep)`` steps (each of norm 1), or
    ``None`` when ``y`` is not reachable.  Any lattice vector of max-norm d is
    a sum of d unit vectors, so unit steps lose nothing.
    """
    px, py = _prim2(x), _prim2(y)
    if px == py:
        return []
    parent = {px: None}
    queue = deque([px])
    while queue:
        c = queue.popleft()
        for rep, q in _zz_neighbours(c, bound):
            nc = primitive_vector(q)
            if nc in parent:
                continue
            parent[nc] = (c, rep, q)
            if nc == py:
                steps = []
                node = nc
                while parent[node] is not None:
                    prev_c, r, qq = parent[node]
                    steps.append((r, qq))
                    node = prev_c
                return steps[::-1]
            queue.append(nc)
    return None


def zz_big_delta(x, y, bound: int) -> int | None:
    chain = zz_chain(x, y, bound)
    return None if chain is None else len(chain)


def zz_check_chain(x, y, steps) -> bool:
    """Each step has max-norm 1, joins the classes in order, and the chain
    runs from [x] to [y]."""
    cur = _prim2(x)
    for a, b in steps:
        if primitive_vector(a) != cur:
            return False
        if max(abs(a[0] - b[0]), abs(a[1] - b[1])) != 1:
            return False
        cur = primitive_vector(b)
    return cur == _prim2(y)

"""Projective spaces of finitely generated abelian groups.

For an abelian group G, nonzero x and y are *one-step related* when both
are multiples of a common element; the projective space P(G) is the set of
classes of the equivalence relation this generates.  Classes are decided
through complete invariants rather than by searching chains:

* a non-torsion element is equivalent to anything with the same free part
  up to rational scaling, so its class is the primitive free vector;
* if the torsion subgroup involves two distinct primes there is a single
  torsion class;
* for a p-group every torsion element is equivalent to a unique line of
  the elementary subgroup {x : px = 0}, reached by the least multiple that
  lands there.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, lcm

from sympy import factorint

from .errors import DomainError, ParseError


def _prime_power(q: int):
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, e), = f.items()
    return p, e


def split_cyclic(order: int) -> list[int]:
    """Prime-power factors of Z_order, by increasing prime: ``split_cyclic(12) == [4, 3]``."""
    if order < 2:
        raise DomainError(f"cyclic order must be >= 2, got {order}")
    return [p**e for p, e in sorted(factorint(order).items())]


@dataclass(frozen=True)
class FgGroup:
    """Z^rank + Z_{q_1} + ... with every q_i a prime power.

    ``source_orders`` remembers cyclic factors as the user wrote them (for
    instance ``Z6``); :meth:`element` then accepts residues per written factor
    and splits them by the Chinese remainder theorem.
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()
    source_orders: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.rank < 0:
            raise DomainError("rank must be non-negative")
        for q in self.torsion:
            if q < 2 or _prime_power(q) is None:
                raise DomainError(f"torsion entry {q} is not a prime power > 1")
        if self.source_orders is not None:
            split = [q for s in self.source_orders for q in split_cyclic(s)]
            if tuple(split) != self.torsion:
                raise DomainError("source_orders do not split into the torsion list")

    @classmethod
    def from_orders(cls, rank: int, orders) -> "FgGroup":
        """Build from arbitrary cyclic orders, e.g. ``from_orders(0, [6])``."""
        orders = tuple(orders)
        torsion = tuple(q for s in orders for q in split_cyclic(s))
        return cls(rank, torsion, orders)

    @property
    def primes(self) -> set[int]:
        return {_prime_power(q)[0] for q in self.torsion}

    @property
    def exponent(self) -> int:
        return reduce(lcm, self.torsion, 1)

    @property
    def torsion_order(self) -> int:
        out = 1
        for q in self.torsion:
            out *= q
        return out

    def element(self, free=(), residues=()) -> "GroupElement":
        free = tuple(int(v) for v in free)
        residues = tuple(int(v) for v in residues)
        if len(free) != self.rank:
            raise DomainError(f"expected {self.rank} free coordinates, got {len(free)}")
        if self.source_orders is not None and len(residues) == len(self.source_orders):
            residues = tuple(r % q for r, s in zip(residues, self.source_orders)
                             for q in split_cyclic(s))
        if len(residues) != len(self.torsion):
            raise DomainError(f"expected {len(self.torsion)} torsion residues, got {len(residues)}")
        return GroupElement(free, tuple(r % q for r, q in zip(residues, self.torsion)))

    def zero(self) -> "GroupElement":
        return GroupElement((0,) * self.rank, (0,) * len(self.torsion))

    def torsion_elements(self):
        for res in itertools.product(*(range(q) for q in self.torsion)):
            yield GroupElement((0,) * self.rank, res)

    def elements_in_box(self, bound: int):
        """All elements with free coordinates in [-bound, bound]."""
        for free in itertools.product(range(-bound, bound + 1), repeat=self.rank):
            for res in itertools.product(*(range(q) for q in self.torsion)):
                yield GroupElement(free, res)

    def add(self, x, y):
        return GroupElement(
            tuple(a + b for a, b in zip(x.free_part, y.free_part)),
            tuple((a + b) % q for a, b, q in zip(x.torsion_part, y.torsion_part, self.torsion)),
        )

    def mul(self, r: int, x):
        return GroupElement(
            tuple(r * a for a in x.free_part),
            tuple((r * a) % q for a, q in zip(x.torsion_part, self.torsion)),
        )

    def order(self, x) -> int | None:
        """Order of ``x``; ``None`` for elements of infinite order."""
        if any(x.free_part):
            return None
        return reduce(lcm, (q // gcd(q, a) for a, q in zip(x.torsion_part, self.torsion)), 1)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z{q}" for q in (self.source_orders or self.torsion)]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class GroupElement:
    free_part: tuple[int, ...]
    torsion_part: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.free_part) and not any(self.torsion_part)

    def is_torsion(self) -> bool:
        return not any(self.free_part)

    def __str__(self):
        return "(" + ",".join(map(str, self.free_part)) + ";" + ",".join(map(str, self.torsion_part)) + ")"


# --- classes ------------------------------------------------------------


@dataclass(frozen=True)
class Star:
    """The adjoined basepoint, the class of 0."""

    def __str__(self):
        return "*"


@dataclass(frozen=True)
class FreeClass:
    vector: tuple[int, ...]

    def __str__(self):
        return "[" + ",".join(map(str, self.vector)) + "]"


@dataclass(frozen=True)
class TorsionPointClass:
    """``label`` is ``"⊤"`` for the single class of a mixed-prime torsion
    group, or ``(p, line)`` with ``line`` normalised to lead with 1."""

    label: object

    def __str__(self):
        if self.label == "⊤":
            return "⊤"
        p, line = self.label
        return f"F{p}[" + ",".join(map(str, line)) + "]"


ProjClass = Star | FreeClass | TorsionPointClass
MIXED = TorsionPointClass("⊤")


def primitive_vector(v) -> tuple[int, ...]:
    """Divide by the gcd and make the first nonzero entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        raise DomainError("zero vector has no primitive direction")
    out = [c // g for c in v]
    lead = next(c for c in out if c)
    return tuple(-c for c in out) if lead < 0 else tuple(out)


def canonicalize(G: FgGroup, x: GroupElement):
    if x.is_zero():
        return Star()
    if not x.is_torsion():
        return FreeClass(primitive_vector(x.free_part))
    if len(G.primes) >= 2:
        return MIXED
    p = next(iter(G.primes))
    # least multiple landing in the order-p subgroup
    n = G.order(x) // p
    y = G.mul(n, x)
    line = []
    for r, q in zip(y.torsion_part, G.torsion):
        line.append((r // (q // p)) % p)
    lead = next(c for c in line if c)
    inv = pow(lead, -1, p)
    return TorsionPointClass((p, tuple((c * inv) % p for c in line)))


def equivalent(G: FgGroup, x: GroupElement, y: GroupElement) -> bool:
    if x.is_zero() or y.is_zero():
        raise DomainError("projective equivalence is defined on nonzero elements")
    return canonicalize(G, x) == canonicalize(G, y)


def _multiplier_exists(G: FgGroup, m: GroupElement, x: GroupElement) -> bool:
    """Is there an integer r with r*m == x?"""
    nz = [i for i, c in enumerate(m.free_part) if c]
    if nz:
        i = nz[0]
        if x.free_part[i] % m.free_part[i]:
            return False
        candidates = [x.free_part[i] // m.free_part[i]]
    else:
        if any(x.free_part):
            return False
        candidates = range(G.exponent)
    return any(G.mul(r, m) == x for r in candidates)


def related_one_step(G: FgGroup, x: GroupElement, y: GroupElement) -> bool:
    """Whether ``x = r*m`` and ``y = s*m`` for some element m and integers r, s.

    Search region: a divisor m of x has ``|m_i| <= |x_i|`` on every free
    coordinate, so free coordinates of m range over a box bounded by the
    largest free coordinate of x and y; torsion coordinates are exhaustive.
    A multiplier r is forced by any nonzero free coordinate of m and is
    otherwise only meaningful modulo the torsion exponent.
    """
    if x.is_zero() or y.is_zero():
        raise DomainError("one-step relation is defined on nonzero elements")
    if x == y:
        return True
    bound = max((abs(c) for c in x.free_part + y.free_part), default=0)
    for m in G.elements_in_box(bound):
        if m.is_zero():
            continue
        if _multiplier_exists(G, m, x) and _multiplier_exists(G, m, y):
            return True
    return False


def class_count(G: FgGroup) -> int:
    """Number of points of P(G) for a finite group G."""
    if G.rank > 0:
        raise DomainError("class_count needs a finite group (rank 0)")
    if not G.torsion:
        return 0
    if len(G.primes) >= 2:
        return 1
    p = next(iter(G.primes))
    n = len(G.torsion)
    return (p**n - 1) // (p - 1)


def common_multiple_witness(G: FgGroup, x: GroupElement, y: GroupElement, limit: int | None = None):
    """Integers (a, b) with ``a*x == b*y != 0``, or ``None``.

    ``None`` is returned for torsion or inequivalent inputs.  For equivalent
    non-torsion inputs with free parts c*v and d*v (v primitive), the pair
    (e*d, e*c) with e the torsion exponent always works, so searching
    ``max(|a|, |b|) <= e*max(|c|, |d|)`` cannot fail.
    """
    if x.is_torsion() or y.is_torsion():
        return None
    if canonicalize(G, x) != canonicalize(G, y):
        return None
    v = primitive_vector(x.free_part)
    i = next(idx for idx, c in enumerate(v) if c)
    c, d = x.free_part[i] // v[i], y.free_part[i] // v[i]
    bound = limit or G.exponent * max(abs(c), abs(d))
    for size in range(1, bound + 1):
        for a in range(1, size + 1):
            bs = [size] if a < size else list(range(1, size + 1))
            for b in bs + [-t for t in bs]:
                ax = G.mul(a, x)
                if ax == G.mul(b, y) and not ax.is_zero():
                    return a, b
    raise AssertionError("search bound violated")  # pragma: no cover


# --- literals -----------------------------------------------------------

_GROUP_TERM = re.compile(r"\s*Z(?:\s*\^\s*(\d+)|(\d+))?\s*")


def parse_group(text: str) -> FgGroup:
    """Parse ``"Z^2 + Z2 + Z4 + Z3"``; ``Zn`` may be any n >= 2."""
    rank = 0
    orders = []
    pos = 0
    pieces = text.split("+")
    for piece in pieces:
        m = _GROUP_TERM.fullmatch(piece)
        if not m:
            off = len(piece) - len(piece.lstrip())
            raise ParseError("expected 'Z', 'Z^r' or 'Zn'", text, pos + off)
        if m.group(2):
            n = int(m.group(2))
            if n < 2:
                raise ParseError("cyclic order must be >= 2", text, pos + piece.index(m.group(2)))
            orders.append(n)
        else:
            rank += int(m.group(1)) if m.group(1) else 1
        pos += len(piece) + 1
    return FgGroup.from_orders(rank, orders)


def parse_element(text: str, G: FgGroup) -> GroupElement:
    """Parse ``"(3,-1;1,2,0)"``: free coordinates, ``;``, torsion residues."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError("element must be parenthesised", text, 0)
    body = s[1:-1]
    if ";" in body:
        free_s, tors_s = body.split(";", 1)
    elif G.rank:
        free_s, tors_s = body, ""
    else:
        free_s, tors_s = "", body

    def ints(chunk, offset):
        if not chunk.strip():
            return []
        out = []
        for tok in chunk.split(","):
            try:
                out.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok.strip()!r}", text, text.find(tok, offset)) from None
        return out

    try:
        return G.element(ints(free_s, 0), ints(tors_s, 0))
    except DomainError as e:
        raise ParseError(str(e), text, 0) from None

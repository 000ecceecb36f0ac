"""Generator knots, integer combinations of them, and their signatures.

Signatures use the normalised convention sigma' = -sigma/2 with
``omega = exp(pi i t)``, so the torus knot T(2, 2m+1) has sigma' stepping
from 0 up to m at the points (2j-1)/(2m+1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

from .errors import DomainError, ParseError, UnsupportedGeneratorError
from .exactnum import StepFunction, as_rational, sf_add, sf_scale, sf_sup_abs


@dataclass(frozen=True, order=True)
class TorusKnot:
    """The (2, 2m+1) torus knot."""

    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise DomainError(f"torus parameter m must be >= 1, got {self.m!r}")

    @property
    def crossings(self) -> int:
        return 2 * self.m + 1

    def __str__(self):
        return f"T(2,{2 * self.m + 1})"


@dataclass(frozen=True, order=True)
class TwistKnot:
    """The n-twisted double of the unknot, Seifert form [[1, 1], [0, n]]."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"twist parameter n must be >= 1, got {self.n!r}")

    def __str__(self):
        return f"W({self.n})"


Generator = TorusKnot | TwistKnot


def _gen_key(g):
    return (0, g.m) if isinstance(g, TorusKnot) else (1, g.n)


class KnotCombo:
    """A formal integer combination of generators (connected sum in the
    concordance group; negative coefficients are mirror images).

    >>> str(KnotCombo({TorusKnot(8): 2, TorusKnot(5): -3}))
    '-3*T(2,11) + 2*T(2,17)'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict = {}
        for g, c in dict(terms or {}).items():
            if not isinstance(g, (TorusKnot, TwistKnot)):
                raise TypeError(f"not a generator: {g!r}")
            acc[g] = acc.get(g, 0) + int(c)
        items = sorted(((g, c) for g, c in acc.items() if c), key=lambda gc: _gen_key(gc[0]))
        self._terms = tuple(items)
        self._hash = hash(self._terms)

    @classmethod
    def torus(cls, crossings: int, coeff: int = 1) -> "KnotCombo":
        """``KnotCombo.torus(13)`` is T(2,13)."""
        if crossings % 2 == 0 or crossings < 3:
            raise DomainError(f"T(2,{crossings}) is not a nontrivial 2-stranded torus knot")
        return cls({TorusKnot((crossings - 1) // 2): coeff})

    @property
    def terms(self):
        return self._terms

    def as_dict(self):
        return dict(self._terms)

    def coefficient(self, g) -> int:
        return dict(self._terms).get(g, 0)

    def generators(self):
        return [g for g, _ in self._terms]

    def is_zero(self) -> bool:
        return not self._terms

    def has_twist(self) -> bool:
        return any(isinstance(g, TwistKnot) for g, _ in self._terms)

    def __eq__(self, other):
        return isinstance(other, KnotCombo) and self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if not isinstance(other, KnotCombo):
            return NotImplemented
        d = self.as_dict()
        for g, c in other._terms:
            d[g] = d.get(g, 0) + c
        return KnotCombo(d)

    def __neg__(self):
        return KnotCombo({g: -c for g, c in self._terms})

    def __sub__(self, other):
        if not isinstance(other, KnotCombo):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return KnotCombo({g: k * c for g, c in self._terms})

    __rmul__ = __mul__

    def __repr__(self):
        return f"KnotCombo({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (g, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(g) if mag == 1 else f"{mag}*{g}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)


# --- signatures --------------------------------------------------------


@lru_cache(maxsize=None)
def torus_signature(m: int) -> StepFunction:
    """sigma' of T(2, 2m+1): value j on ((2j-1)/(2m+1), (2j+1)/(2m+1))."""
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"torus parameter m must be >= 1, got {m!r}")
    q = 2 * m + 1
    return StepFunction(tuple(Fraction(2 * j - 1, q) for j in range(1, m + 1)), tuple(range(m + 1)))


def generator_signature(g) -> StepFunction:
    if isinstance(g, TwistKnot):
        raise UnsupportedGeneratorError(
            f"{g}: twist-knot signature functions are not implemented (only jump loci)"
        )
    return torus_signature(g.m)


@lru_cache(maxsize=4096)
def combo_signature(c: KnotCombo) -> StepFunction:
    f = StepFunction.zero()
    for g, coeff in c.terms:
        f = sf_add(f, sf_scale(generator_signature(g), coeff))
    return f


def sharp_S(c: KnotCombo) -> int:
    """Maximum of |sigma'| over (0, 1]; a lower bound for the four-genus."""
    return sf_sup_abs(combo_signature(c))


def double_floor(x) -> int:
    """floor(x) off the integers and x - 1 on them, i.e. -floor(-x) - 1."""
    x = as_rational(x)
    return -floor(-x) - 1


def corollary_jump_values(k: int, n: int, a: int, b: int) -> tuple[int, int, int]:
    """Signature of b*T(2,2n+1) - a*T(2,2k+1) just left of 1/(2k+1), at 1,
    and just right of (2k-1)/(2k+1), read off the step function."""
    if not (0 < k < n):
        raise DomainError(f"need 0 < k < n, got k={k}, n={n}")
    if a <= 0 or b <= 0:
        raise DomainError(f"need a, b > 0, got a={a}, b={b}")
    f = combo_signature(KnotCombo({TorusKnot(n): b, TorusKnot(k): -a}))
    q = 2 * k + 1
    v1 = f.value_left_of(Fraction(1, q))
    v2 = f.interval_values[-1]
    v3 = f.value_right_of(Fraction(2 * k - 1, q))
    assert v2 == b * n - a * k
    return v1, v2, v3


def first_jump_count(k: int, n: int) -> int:
    """Number of jumps of sigma'(T(2,2n+1)) strictly below 1/(2k+1)."""
    bound = Fraction(1, 2 * k + 1)
    return sum(1 for t in torus_signature(n).breakpoints if t < bound)


def twist_jump_cosine(n: int) -> Fraction:
    """cos(theta_n) = 1 - 1/(2n), the jump locus of the twist knot K_n."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"twist parameter n must be >= 1, got {n!r}")
    return Fraction(2 * n - 1, 2 * n)


def seifert_genus(c: KnotCombo) -> int:
    total = 0
    for g, coeff in c.terms:
        total += abs(coeff) * (g.m if isinstance(g, TorusKnot) else 1)
    return total


# --- parsing -----------------------------------------------------------


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg, pos=None):
        return ParseError(msg, self.text, self.pos if pos is None else pos)

    def expect(self, ch):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def uint(self):
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise self.error("expected an unsigned integer")
        self.pos += m.end()
        return int(m.group())


def parse_combo(text: str) -> KnotCombo:
    """Parse ``"2*T(2,17) - 3*T(2,11) + W(4)"``.

    Grammar: ``combo := term (('+'|'-') term)*``, ``term := [uint '*'] gen``,
    ``gen := 'T(2,' odd-uint ')' | 'W(' uint ')'``.  A leading sign is also
    accepted, and ``"0"`` is the empty combination.  Whitespace is
    insignificant.
    """
    if text.strip() == "0":
        return KnotCombo()
    lx = _Lexer(text)
    terms: dict = {}
    sign = 1
    if lx.peek() and lx.peek() in "+-":
        sign = -1 if lx.peek() == "-" else 1
        lx.pos += 1
    while True:
        coeff = 1
        if lx.peek().isdigit():
            coeff = lx.uint()
            lx.expect("*")
        start = lx.pos
        ch = lx.peek()
        if ch == "T":
            lx.pos += 1
            lx.expect("(")
            if lx.uint() != 2:
                raise lx.error("only 2-stranded torus knots T(2,q) are supported", start)
            lx.expect(",")
            qpos = lx.pos
            q = lx.uint()
            if q % 2 == 0:
                raise lx.error(f"T(2,{q}): second argument must be odd", qpos)
            if q < 3:
                raise lx.error(f"T(2,{q}) is the unknot; use q >= 3", qpos)
            lx.expect(")")
            g = TorusKnot((q - 1) // 2)
        elif ch == "W":
            lx.pos += 1
            lx.expect("(")
            npos = lx.pos
            n = lx.uint()
            if n < 1:
                raise lx.error("twist parameter must be >= 1", npos)
            lx.expect(")")
            g = TwistKnot(n)
        else:
            raise lx.error("expected a generator 'T(2,q)' or 'W(n)'")
        terms[g] = terms.get(g, 0) + sign * coeff
        nxt = lx.peek()
        if nxt == "":
            break
        if nxt not in "+-":
            raise lx.error("expected '+', '-' or end of input")
        sign = 1 if nxt == "+" else -1
        lx.pos += 1
    return KnotCombo(terms)

"""Exact piecewise-constant step functions on the interval (0, 1].

A :class:`StepFunction` stores integer values on the open intervals cut out
by its breakpoints.  The value at a breakpoint is never stored; it is the
average of the two neighbouring interval values, so it may be a half
integer.  All coordinates are :class:`fractions.Fraction`.

>>> f = StepFunction.from_pieces([Fraction(1, 3)], [0, 1])
>>> f(Fraction(1, 2)), f(Fraction(1, 3))
(Fraction(1, 1), Fraction(1, 2))
>>> sf_sup_abs(f + f.scale(-4))
3
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DomainError

Rational = Fraction

ONE = Fraction(1)


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class StepFunction:
    breakpoints: tuple[Fraction, ...] = ()
    interval_values: tuple[int, ...] = (0,)

    def __post_init__(self):
        bps, vals = self.breakpoints, self.interval_values
        if len(vals) != len(bps) + 1:
            raise ValueError("need exactly one more interval value than breakpoints")
        for lo, hi in zip(bps, bps[1:]):
            if not lo < hi:
                raise ValueError("breakpoints must be strictly increasing")
        if bps and not (0 < bps[0] and bps[-1] < 1):
            raise ValueError("breakpoints must lie in the open interval (0, 1)")
        for a, b in zip(vals, vals[1:]):
            if a == b:
                raise ValueError("non-canonical: equal neighbouring values")

    @classmethod
    def from_pieces(cls, breakpoints, values) -> "StepFunction":
        """Build the canonical form, merging equal neighbours."""
        bps = [as_rational(b) for b in breakpoints]
        vals = [int(v) for v in values]
        if len(vals) != len(bps) + 1:
            raise ValueError("need exactly one more interval value than breakpoints")
        out_b: list[Fraction] = []
        out_v = [vals[0]]
        for b, v in zip(bps, vals[1:]):
            if v != out_v[-1]:
                out_b.append(b)
                out_v.append(v)
        return cls(tuple(out_b), tuple(out_v))

    @classmethod
    def zero(cls) -> "StepFunction":
        return cls()

    def canonical(self) -> "StepFunction":
        return StepFunction.from_pieces(self.breakpoints, self.interval_values)

    # --- evaluation -----------------------------------------------------

    def value_right_of(self, t) -> int:
        """Value on the open interval immediately to the right of ``t``."""
        t = as_rational(t)
        return self.interval_values[bisect_right(self.breakpoints, t)]

    def value_left_of(self, t) -> int:
        """Value on the open interval immediately to the left of ``t``."""
        t = as_rational(t)
        return self.interval_values[bisect_left(self.breakpoints, t)]

    def jump_at(self, t) -> int:
        return self.value_right_of(t) - self.value_left_of(t)

    def __call__(self, t) -> Fraction:
        return sf_eval(self, t)

    def intervals(self):
        """Yield ``(lo, hi, value)`` for each open interval, ending at 1."""
        edges = (Fraction(0),) + self.breakpoints + (ONE,)
        for i, v in enumerate(self.interval_values):
            yield edges[i], edges[i + 1], v

    def sample_points(self):
        """One interior point per interval (the midpoint)."""
        return [(lo + hi) / 2 for lo, hi, _ in self.intervals()]

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return sf_add(self, other)

    def __neg__(self):
        return sf_scale(self, -1)

    def __sub__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return sf_add(self, sf_scale(other, -1))

    def scale(self, c: int) -> "StepFunction":
        return sf_scale(self, c)

    def __rmul__(self, c):
        if isinstance(c, int):
            return sf_scale(self, c)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.interval_values == (0,)

    def __str__(self):
        parts = [f"({lo}, {hi}): {v}" for lo, hi, v in self.intervals()]
        return "; ".join(parts)


def sf_add(f: StepFunction, g: StepFunction) -> StepFunction:
    """Pointwise sum, in canonical form."""
    cuts = sorted(set(f.breakpoints) | set(g.breakpoints))
    lefts = [Fraction(0)] + cuts
    vals = [f.value_right_of(lo) + g.value_right_of(lo) for lo in lefts]
    return StepFunction.from_pieces(cuts, vals)


def sf_scale(f: StepFunction, c: int) -> StepFunction:
    if c == 0:
        return StepFunction()
    return StepFunction(f.breakpoints, tuple(c * v for v in f.interval_values))


def sf_sup_abs(f: StepFunction) -> int:
    # breakpoint averages never exceed the larger neighbour
    return max(abs(v) for v in f.interval_values)


def sf_argmax_abs(f: StepFunction) -> Fraction:
    """A point where ``|f|`` attains :func:`sf_sup_abs` (1 if it is attained there)."""
    best = sf_sup_abs(f)
    if abs(f.interval_values[-1]) == best:
        return ONE
    for lo, hi, v in f.intervals():
        if abs(v) == best:
            return (lo + hi) / 2
    raise AssertionError("unreachable")


def sf_eval(f: StepFunction, t) -> Fraction:
    """Value at ``t`` in (0, 1]; breakpoints get the two-sided average."""
    t = as_rational(t)
    if not 0 < t <= 1:
        raise DomainError(f"t = {t} outside (0, 1]")
    i = bisect_left(f.breakpoints, t)
    if i < len(f.breakpoints) and f.breakpoints[i] == t:
        return Fraction(f.interval_values[i] + f.interval_values[i + 1], 2)
    return Fraction(f.interval_values[i])

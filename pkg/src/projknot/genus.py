"""Certified four-genus intervals for combinations of T(2, 2m+1) knots.

Upper bounds come from a combinatorial model of surgery curves on the
standard Seifert surface of ``sum c_i T(2, 2m_i+1)``.  Every positive term
contributes blocks of ``2m`` bands along the top of a disk and every
negative term contributes blocks along the bottom.  A surgery curve passes
over one top band and one bottom band; curves come in *runs* that pair
consecutive bands of one top block with consecutive bands of one bottom
block.  Runs are non-crossing, and two consecutive runs sharing a block
must leave at least one free band between them in that block.  Each curve
lowers the genus by one, so

    g4 <= (total bands)/2 - (number of curves).

Lower bounds are the signature bound ``S = max |sigma'|``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, UnsupportedGeneratorError
from .exactnum import sf_argmax_abs
from .knots import KnotCombo, TorusKnot, combo_signature, seifert_genus, sharp_S


@dataclass(frozen=True)
class SurgerySchema:
    top_blocks: tuple[int, ...]
    bottom_blocks: tuple[int, ...]
    runs: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top_blocks", tuple(self.top_blocks))
        object.__setattr__(self, "bottom_blocks", tuple(self.bottom_blocks))
        object.__setattr__(self, "runs", tuple(tuple(r) for r in self.runs))

    @property
    def curves(self) -> int:
        return sum(r[2] for r in self.runs)

    @property
    def total_bands(self) -> int:
        return sum(self.top_blocks) + sum(self.bottom_blocks)

    def genus_after_surgery(self) -> int:
        return self.total_bands // 2 - self.curves

    def band_layout(self):
        """Left-packed band positions of each run: a list of
        ``(top_block, top_start, bottom_block, bottom_start, length)``."""
        out = []
        cursor_t: dict[int, int] = {}
        cursor_b: dict[int, int] = {}
        for i, j, n in self.runs:
            ts = cursor_t.get(i, -1) + 1
            bs = cursor_b.get(j, -1) + 1
            out.append((i, ts, j, bs, n))
            cursor_t[i] = ts + n
            cursor_b[j] = bs + n
        return out

    def to_json(self):
        return {
            "top_blocks": list(self.top_blocks),
            "bottom_blocks": list(self.bottom_blocks),
            "runs": [list(r) for r in self.runs],
            "curves": self.curves,
        }

    @classmethod
    def from_json(cls, d):
        return cls(tuple(d["top_blocks"]), tuple(d["bottom_blocks"]), tuple(map(tuple, d["runs"])))


def schema_validate(s: SurgerySchema) -> bool:
    """True iff ``s`` is a well-formed, merged, non-crossing schema obeying
    the gap rule on both sides."""
    for blocks in (s.top_blocks, s.bottom_blocks):
        if any((not isinstance(b, int)) or b <= 0 or b % 2 for b in blocks):
            return False
    nt, nb = len(s.top_blocks), len(s.bottom_blocks)
    used_t = [0] * nt
    used_b = [0] * nb
    prev = None
    for run in s.runs:
        if len(run) != 3:
            return False
        i, j, n = run
        if not (0 <= i < nt and 0 <= j < nb) or n < 1:
            return False
        if prev is not None:
            pi, pj = prev
            if i < pi or j < pj or (i, j) == (pi, pj):
                return False
            # a block continued from the previous run needs one free band
            if i == pi:
                used_t[i] += 1
            if j == pj:
                used_b[j] += 1
        used_t[i] += n
        used_b[j] += n
        if used_t[i] > s.top_blocks[i] or used_b[j] > s.bottom_blocks[j]:
            return False
        prev = (i, j)
    return True


def _check_blocks(blocks, side):
    blocks = tuple(blocks)
    if not blocks:
        raise DomainError(f"{side} block list must be nonempty")
    for b in blocks:
        if not isinstance(b, int) or b <= 0 or b % 2:
            raise DomainError(f"{side} block sizes must be even positive integers, got {b!r}")
    return blocks


@lru_cache(maxsize=8192)
def _solve(tops: tuple[int, ...], bottoms: tuple[int, ...]):
    # State (i, a, j, b, open): current top block i with a slots consumed,
    # current bottom block j with b consumed; open means the last curve sits
    # in cell (i, j) so another curve extends the run without gaps.  A new
    # run entering a block that already holds curves pays one gap slot.
    # Cells are solved from the last one backwards; only the a = 0 row of
    # cell (i+1, j) and the b = 0 column of cell (i, j+1) are needed.
    nt, nb = len(tops), len(bottoms)
    NEG = -1
    # tables[(i, j)] = (closed, opened) as lists of lists [a][b]
    tables = {}
    for i in range(nt - 1, -1, -1):
        T = tops[i]
        for j in range(nb - 1, -1, -1):
            B = bottoms[j]
            below = tables.get((i + 1, j))
            right = tables.get((i, j + 1))
            adv_top = below[0][0] if below else None  # row a=0, indexed by b
            adv_bot = [row[0] for row in right[0]] if right else None  # column b=0, by a
            closed = [[0] * (B + 1) for _ in range(T + 1)]
            opened = [[NEG] * (B + 1) for _ in range(T + 1)]
            for a in range(T, -1, -1):
                crow = closed[a]
                orow = opened[a]
                onext = opened[a + 1] if a + 1 <= T else None
                a_new = a + 2 if a else 1
                o_new_row = opened[a_new] if a_new <= T else None
                ab = adv_bot[a] if adv_bot is not None else 0
                for b in range(B, -1, -1):
                    base = ab
                    if adv_top is not None and adv_top[b] > base:
                        base = adv_top[b]
                    # extend an open run
                    ov = base
                    if onext is not None and b + 1 <= B:
                        v = 1 + onext[b + 1]
                        if v > ov:
                            ov = v
                    orow[b] = ov
                    # start a new run here
                    cv = base
                    if o_new_row is not None:
                        b_new = b + 2 if b else 1
                        if b_new <= B:
                            v = 1 + o_new_row[b_new]
                            if v > cv:
                                cv = v
                    crow[b] = cv
            tables[(i, j)] = (closed, opened)
    best = tables[(0, 0)][0][0][0]
    runs = _reconstruct(tops, bottoms, tables)
    return best, tuple(runs)


def _reconstruct(tops, bottoms, tables):
    nt, nb = len(tops), len(bottoms)
    i = j = a = b = 0
    is_open = False
    runs: list[list[int]] = []
    while True:
        closed, opened = tables[(i, j)]
        cur = (opened if is_open else closed)[a][b]
        if cur == 0:
            break
        T, B = tops[i], bottoms[j]
        if is_open:
            if a + 1 <= T and b + 1 <= B and 1 + opened[a + 1][b + 1] == cur:
                a, b = a + 1, b + 1
                runs[-1][2] += 1
                continue
        else:
            a2 = a + 2 if a else 1
            b2 = b + 2 if b else 1
            if a2 <= T and b2 <= B and 1 + opened[a2][b2] == cur:
                a, b, is_open = a2, b2, True
                runs.append([i, j, 1])
                continue
        if i + 1 < nt and tables[(i + 1, j)][0][0][b] == cur:
            i, a, is_open = i + 1, 0, False
            continue
        if j + 1 < nb and tables[(i, j + 1)][0][a][0] == cur:
            j, b, is_open = j + 1, 0, False
            continue
        raise AssertionError("inconsistent DP table")
    return [tuple(r) for r in runs]


def max_surgeries(top_blocks, bottom_blocks) -> tuple[int, SurgerySchema]:
    """Largest number of surgery curves on a valid schema, with a witness.

    >>> max_surgeries([12], [4, 4])[0]
    8
    """
    tops = _check_blocks(top_blocks, "top")
    bottoms = _check_blocks(bottom_blocks, "bottom")
    best, runs = _solve(tops, bottoms)
    return best, SurgerySchema(tops, bottoms, runs)


def max_surgeries_bruteforce(top_blocks, bottom_blocks) -> tuple[int, SurgerySchema]:
    """Exhaustive enumeration of every valid schema; only for small inputs.

    Independent of the dynamic program: it grows run lists one run at a time
    and keeps every extension that :func:`schema_validate` accepts.
    """
    tops = _check_blocks(top_blocks, "top")
    bottoms = _check_blocks(bottom_blocks, "bottom")
    nt, nb = len(tops), len(bottoms)
    best = [0, ()]

    def extend(runs, total):
        if total > best[0]:
            best[0], best[1] = total, tuple(runs)
        pi, pj = (runs[-1][0], runs[-1][1]) if runs else (0, 0)
        for i in range(pi, nt):
            for j in range(pj, nb):
                if runs and (i, j) == (pi, pj):
                    continue
                for n in range(1, min(tops[i], bottoms[j]) + 1):
                    cand = runs + [(i, j, n)]
                    if not schema_validate(SurgerySchema(tops, bottoms, cand)):
                        break  # longer runs in this cell fail too
                    extend(cand, total + n)

    extend([], 0)
    return best[0], SurgerySchema(tops, bottoms, best[1])


# --- upper bounds for knot combinations -------------------------------


def _torus_only(c: KnotCombo):
    if c.has_twist():
        raise UnsupportedGeneratorError(f"{c}: twist-knot terms have no surgery model")


def blocks_of(c: KnotCombo) -> tuple[list[int], list[int]]:
    """Band-block sizes: positive terms on top, negative terms on the bottom."""
    _torus_only(c)
    tops, bottoms = [], []
    for g, coeff in c.terms:
        (tops if coeff > 0 else bottoms).extend([2 * g.m] * abs(coeff))
    return tops, bottoms


def _orderings(blocks, cap):
    perms = sorted(set(itertools.permutations(blocks))) if len(set(blocks)) > 1 else [tuple(blocks)]
    if len(perms) > cap:
        return [tuple(sorted(blocks))]
    return perms


def upper_bound_g4(c: KnotCombo, max_orderings: int = 24) -> tuple[int, SurgerySchema]:
    """Four-genus upper bound from the best surgery schema.

    Blocks of different sizes are tried in every order (up to
    ``max_orderings`` arrangements per side, else sorted order); blocks of
    equal size are interchangeable.
    """
    tops, bottoms = blocks_of(c)
    if not tops or not bottoms:
        return seifert_genus(c), SurgerySchema(tuple(tops), tuple(bottoms), ())
    total = sum(tops) + sum(bottoms)
    best = None
    for t in _orderings(tops, max_orderings):
        for b in _orderings(bottoms, max_orderings):
            count, schema = max_surgeries(t, b)
            if best is None or count > best[0]:
                best = (count, schema)
    return total // 2 - best[0], best[1]


def closed_form_b1(k: int, n: int) -> tuple[int, int | None]:
    """Genus of the constructions for T(2,2n+1) - a*T(2,2k+1) at
    ``a = alpha`` and ``a = alpha + 1`` with ``alpha = floor((2n+1)/(2k+1))``.

    The second value is ``None`` when 2k+1 divides 2n+1.
    """
    if not (isinstance(k, int) and isinstance(n, int) and 0 < k < n):
        raise DomainError(f"need integers 0 < k < n, got k={k!r}, n={n!r}")
    alpha = (2 * n + 1) // (2 * k + 1)
    first = n - alpha * k
    if (2 * n + 1) % (2 * k + 1) == 0:
        return first, None
    return first, (alpha + 1) * (k + 1) - n - 1


def b1_shape(c: KnotCombo):
    """``(k, n, a)`` if ``c`` or its mirror is T(2,2n+1) - a*T(2,2k+1) with
    0 < k < n and a > 0, else ``None``."""
    if len(c.terms) != 2 or c.has_twist():
        return None
    (g1, c1), (g2, c2) = c.terms  # sorted by m, so g1 is the smaller knot
    if c2 == -1:
        c1, c2 = -c1, 1
    if c2 != 1 or c1 >= 0:
        return None
    return g1.m, g2.m, -c1


@dataclass(frozen=True)
class GenusInterval:
    lower: int
    upper: int
    lower_witness: Fraction
    upper_witness: object  # SurgerySchema or a closed-form tag string
    upper_kind: str = field(default="schema")

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"lower {self.lower} exceeds upper {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self):
        w = self.upper_witness
        return {
            "lower": self.lower,
            "upper": self.upper,
            "certified": self.exact,
            "witnesses": {
                "lower": {"kind": "signature", "t": str(self.lower_witness)},
                "upper": {
                    "kind": self.upper_kind,
                    "schema": w.to_json() if isinstance(w, SurgerySchema) else None,
                    "tag": w if isinstance(w, str) else None,
                },
            },
        }


@lru_cache(maxsize=65536)
def g4_interval(c: KnotCombo) -> GenusInterval:
    """Signature lower bound and the best available upper bound."""
    _torus_only(c)
    f = combo_signature(c)
    lower = sharp_S(c)
    t_star = sf_argmax_abs(f)
    cf, cf_tag = None, None
    shape = b1_shape(c)
    if shape is not None:
        k, n, a = shape
        alpha = (2 * n + 1) // (2 * k + 1)
        v_alpha, v_next = closed_form_b1(k, n)
        cf = {alpha: v_alpha, alpha + 1: v_next}.get(a)
        cf_tag = f"closed-form(k={k},n={n},a={a})"
    if cf is not None and cf == lower:
        # already tight; no need to run the schema search
        return GenusInterval(lower, cf, t_star, cf_tag, "closed-form")
    upper, witness = upper_bound_g4(c)
    kind = "schema"
    seifert = seifert_genus(c)
    if seifert < upper:
        upper, witness, kind = seifert, "seifert-genus", "seifert"
    if cf is not None and cf < upper:
        upper, witness, kind = cf, cf_tag, "closed-form"
    return GenusInterval(lower, upper, t_star, witness, kind)

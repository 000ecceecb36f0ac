import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from projknot.errors import DomainError, ParseError, UnsupportedGeneratorError
from projknot.knots import (
    KnotCombo,
    TorusKnot,
    TwistKnot,
    combo_signature,
    corollary_jump_values,
    double_floor,
    first_jump_count,
    generator_signature,
    parse_combo,
    seifert_genus,
    sharp_S,
    torus_signature,
    twist_jump_cosine,
)


def seifert_matrix_signature(q, t):
    """-sigma/2 of the Hermitian form built from the standard Seifert matrix
    of T(2, q), evaluated numerically at exp(pi i t)."""
    n = q - 1
    V = -np.eye(n) + np.diag(np.ones(n - 1), -1)
    w = np.exp(1j * np.pi * float(t))
    e = np.linalg.eigvalsh((1 - w) * V + (1 - np.conj(w)) * V.T)
    return -(int(np.sum(e > 1e-9)) - int(np.sum(e < -1e-9))) // 2


combos = st.dictionaries(
    st.builds(TorusKnot, st.integers(1, 12)), st.integers(-3, 3).filter(bool), max_size=4
).map(KnotCombo)


def test_signature_against_seifert_matrix():
    rng = random.Random(7)
    for _ in range(300):
        m = rng.randint(1, 15)
        q = 2 * m + 1
        t = F(rng.randint(1, 9999), 10000)
        if t * q % 2 == 1:
            continue  # skip breakpoints
        assert torus_signature(m).value_right_of(t) == seifert_matrix_signature(q, t)


def test_signature_small_cases():
    f = torus_signature(1)
    assert f.breakpoints == (F(1, 3),) and f.interval_values == (0, 1)
    f = torus_signature(2)
    assert f.breakpoints == (F(1, 5), F(3, 5)) and f.interval_values == (0, 1, 2)


@given(combos, combos)
def test_signature_additive(a, b):
    assert combo_signature(a + b) == combo_signature(a) + combo_signature(b)
    assert combo_signature(-a) == -combo_signature(a)


@given(combos, combos)
def test_S_subadditive(a, b):
    assert sharp_S(a + b) <= sharp_S(a) + sharp_S(b)


@given(combos)
def test_S_at_most_seifert_genus(c):
    assert sharp_S(c) <= seifert_genus(c)


@given(combos)
def test_parse_roundtrip(c):
    assert parse_combo(str(c)) == c


def test_parse_forms():
    assert parse_combo("2*T(2,17) - 3*T(2,11)") == KnotCombo({TorusKnot(8): 2, TorusKnot(5): -3})
    assert parse_combo(" -T(2,3)+W(4) ") == KnotCombo({TorusKnot(1): -1, TwistKnot(4): 1})
    assert parse_combo("T(2,5) + T(2,5)") == KnotCombo({TorusKnot(2): 2})


@pytest.mark.parametrize(
    "text, pos",
    [("T(2,4)", 4), ("T(3,5)", 0), ("T(2,1)", 4), ("T(2,5) * 3", 7), ("X", 0), ("2*", 2), ("T(2,5) +", 8)],
)
def test_parse_errors_point_at_problem(text, pos):
    with pytest.raises(ParseError) as info:
        parse_combo(text)
    assert info.value.position == pos
    assert "^" in info.value.annotated()


def test_twist_signatures_are_unsupported():
    with pytest.raises(UnsupportedGeneratorError):
        generator_signature(TwistKnot(2))
    assert twist_jump_cosine(1) == F(1, 2)
    assert twist_jump_cosine(3) == F(5, 6)


def test_domain_errors():
    with pytest.raises(DomainError):
        TorusKnot(0)
    with pytest.raises(DomainError):
        KnotCombo.torus(4)
    with pytest.raises(DomainError):
        corollary_jump_values(5, 3, 1, 1)


def test_double_floor():
    assert double_floor(3) == 2
    assert double_floor(F(5, 2)) == 2
    assert double_floor(F(-1, 2)) == -1
    assert double_floor(0) == -1


@pytest.mark.parametrize("k,n", [(1, 5), (2, 7), (3, 11), (5, 8), (20, 45), (6, 19)])
def test_first_jump_count_formula(k, n):
    # j counts with (2j-1)/(2n+1) < 1/(2k+1)
    expected = double_floor((F(2 * n + 1, 2 * k + 1) + 1) / 2)
    assert first_jump_count(k, n) == expected


@pytest.mark.parametrize("k,n,a,b", [(3, 11, 3, 1), (5, 8, 3, 2), (20, 45, 2, 1), (1, 4, 2, 3)])
def test_jump_values_by_counting(k, n, a, b):
    # count jumps directly
    def count(m, t):
        return sum(1 for j in range(1, m + 1) if F(2 * j - 1, 2 * m + 1) < t)

    t1 = F(1, 2 * k + 1)
    t3 = F(2 * k - 1, 2 * k + 1)
    v1 = b * count(n, t1) - a * count(k, t1)
    v3 = b * count(n, t3 + F(1, 10**6)) - a * count(k, t3 + F(1, 10**6))
    assert corollary_jump_values(k, n, a, b) == (v1, b * n - a * k, v3)


def test_seifert_genus():
    assert seifert_genus(parse_combo("2*T(2,5) - T(2,15)")) == 11

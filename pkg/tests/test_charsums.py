import cmath
import math

import numpy as np
import pytest

from conftest import prime_powers
from subfield_codes.charsums import (
    additive_char,
    additive_char_values,
    gauss_sum_closed,
    gauss_sum_numeric,
    lemma31_counts,
    lemma31_counts_enumerated,
    multiplicative_char,
    n0_c1,
    n0_c1_at_zero,
    n0_c1_direct,
    n0_c1_full_square,
    n0_c2,
    n0_c2_direct,
    weil_sum_direct,
    weil_sum_quadratic,
)
from subfield_codes.field import DomainError, FieldError, make_field

ODD_SMALL = prime_powers(125, odd_only=True)
ZETA3 = cmath.exp(2j * math.pi / 3)


def close(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) < tol


def test_additive_char_examples():
    f3, f9 = make_field(3, 1), make_field(3, 2)
    for x in f9.elements():
        assert close(additive_char(f9, f9.zero, x), 1)
    assert close(additive_char(f3, f3.one, f3.one), ZETA3)
    assert close(additive_char(f9, f9.one, f9.one), cmath.exp(4j * math.pi / 3))


def test_additive_char_shift_identity():
    f = make_field(5, 2)
    for a in f.elements()[:6]:
        for x in f.elements():
            assert close(additive_char(f, a, x), additive_char(f, f.one, a * x))


def test_gauss_sum_examples():
    assert close(gauss_sum_closed(make_field(5, 1)), math.sqrt(5))
    assert close(gauss_sum_closed(make_field(3, 1)), 1j * math.sqrt(3))
    assert close(gauss_sum_closed(make_field(3, 2)), 3)
    # direct sums written out by hand
    assert close(gauss_sum_numeric(make_field(3, 1)), ZETA3 - ZETA3**2)
    z5 = cmath.exp(2j * math.pi / 5)
    assert close(gauss_sum_numeric(make_field(5, 1)), z5 + z5**4 - z5**2 - z5**3)
    assert close(gauss_sum_numeric(make_field(3, 2)), 3)
    with pytest.raises(DomainError):
        gauss_sum_closed(make_field(2, 2))
    with pytest.raises(DomainError):
        gauss_sum_numeric(make_field(2, 2))


@pytest.mark.parametrize("p,m", ODD_SMALL)
def test_gauss_sum_closed_matches_numeric(p, m):
    f = make_field(p, m)
    g = gauss_sum_numeric(f)
    tol = 1e-9 * math.sqrt(f.q)
    assert abs(abs(g) - math.sqrt(f.q)) < tol
    assert abs(g - gauss_sum_closed(f)) < tol


@pytest.mark.parametrize("p,m", prime_powers(125))
def test_character_orthogonality(p, m):
    f = make_field(p, m)
    for a in range(f.q):
        s = additive_char_values(f, a).sum()
        assert close(s, f.q if a == 0 else 0)
    nz = f.elements()[1:]
    for j in range(f.q - 1):
        s = sum(multiplicative_char(f, j, x) for x in nz)
        assert close(s, f.q - 1 if j == 0 else 0)


def test_weil_sum_examples():
    f3 = make_field(3, 1)
    one, zero = f3.one, f3.zero
    assert close(weil_sum_quadratic(f3, one, zero, zero), 1j * math.sqrt(3))
    assert close(weil_sum_direct(f3, one, zero, zero), 1 + 2 * ZETA3)
    assert close(weil_sum_quadratic(f3, one, one, zero), ZETA3**2 * 1j * math.sqrt(3))
    assert close(weil_sum_direct(f3, one, one, zero), ZETA3**2 * 1j * math.sqrt(3))
    f9 = make_field(3, 2)
    for a2 in f9.elements()[1:]:
        expect = int(f9.eta_table[a2.index]) * gauss_sum_closed(f9)
        assert close(weil_sum_quadratic(f9, a2, f9.zero, f9.zero), expect)
    with pytest.raises(DomainError):
        weil_sum_quadratic(f9, f9.zero, f9.one, f9.one)


@pytest.mark.parametrize("p,m", ODD_SMALL)
def test_weil_closed_matches_direct(p, m):
    f = make_field(p, m)
    rng = np.random.default_rng(1000 * p + m)
    tol = 1e-9 * math.sqrt(f.q)
    for _ in range(200):
        a2 = f.element(int(rng.integers(1, f.q)))
        a1, a0 = (f.element(int(v)) for v in rng.integers(0, f.q, size=2))
        assert abs(weil_sum_quadratic(f, a2, a1, a0) - weil_sum_direct(f, a2, a1, a0)) < tol


def test_square_trace_counts_examples():
    assert lemma31_counts(make_field(3, 1)).as_tuple() == (0, 1, 0, 1)
    assert lemma31_counts_enumerated(make_field(3, 1)).as_tuple() == (0, 1, 0, 1)
    assert lemma31_counts_enumerated(make_field(3, 2)).as_tuple() == (2, 2, 0, 4)
    assert lemma31_counts(make_field(3, 2)).as_tuple() == (2, 2, 0, 4)
    q25 = lemma31_counts(make_field(5, 2))
    assert q25.total == 24
    assert q25 == lemma31_counts_enumerated(make_field(5, 2))


@pytest.mark.parametrize("p,m", [(3, 3), (3, 4), (5, 3), (7, 2), (7, 3), (11, 2), (13, 2)])
def test_square_trace_counts_closed_matches_enumeration(p, m):
    f = make_field(p, m)
    assert lemma31_counts(f) == lemma31_counts_enumerated(f)


def test_n0_c1_examples():
    for p, m in [(3, 1), (3, 2), (5, 1)]:
        f = make_field(p, m)
        z = f.zero
        assert n0_c1(f, z, z, 0) == (p ** (2 * m) + p**m) // 2
        for c in range(1, p):
            assert n0_c1(f, z, z, c) == 0
        for b in f.elements()[1:]:
            assert n0_c1(f, f.generator, b, 1) == (p ** (2 * m - 1) + p ** (m - 1)) // 2


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (3, 2), (7, 1), (11, 1), (13, 1), (5, 2), (17, 1), (19, 1), (23, 1)])
def test_n0_c1_closed_matches_direct_everywhere(p, m):
    f = make_field(p, m)
    for a in f.elements():
        for b in f.elements():
            for c in range(p):
                direct = n0_c1_direct(f, a, b, c)
                assert n0_c1(f, a, b, c) == direct
                # the x in U count is half of (all x of ax^2) plus (x = 0)
                assert 2 * direct == n0_c1_full_square(f, a, b, c) + n0_c1_at_zero(f, b, c)


def test_n0_c2_examples():
    for p in (2, 3):
        f = make_field(p, 2)
        z = f.zero
        assert n0_c2(f, z, z, 0) == p * p * (p * p - 1)
        for b in f.elements()[1:]:
            assert n0_c2(f, z, b, 0) == p * (p * p - 1)
        for a in f.elements()[1:]:
            if f.trace_table[a.index]:
                for c in range(1, p):
                    assert n0_c2(f, a, z, c) == p * p * (p + 1) == n0_c2_direct(f, a, z, c)
    with pytest.raises(FieldError):
        n0_c2(make_field(3, 1), make_field(3, 1).one, make_field(3, 1).one, 0)


def test_n0_c2_trace_zero_branch_is_empty():
    # a != 0, b = 0, Tr(a) = 0, c != 0 has no solutions at all
    for p in (2, 3, 5):
        f = make_field(p, 2)
        for a in f.elements()[1:]:
            if f.trace_table[a.index] == 0:
                for c in range(1, p):
                    assert n0_c2_direct(f, a, f.zero, c) == 0 == n0_c2(f, a, f.zero, c)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_n0_c2_closed_matches_direct_everywhere(p):
    f = make_field(p, 2)
    for a in f.elements():
        for b in f.elements():
            for c in range(p):
                assert n0_c2(f, a, b, c) == n0_c2_direct(f, a, b, c)

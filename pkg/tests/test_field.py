import itertools

import numpy as np
import pytest

from conftest import prime_powers
from subfield_codes.field import (
    DomainError,
    FieldError,
    arith,
    make_field,
    norm,
    quadratic_character,
    squares,
    trace,
)

SMALL = prime_powers(125)


# -- naive polynomial arithmetic over Z_p, used as an oracle ------------------

def poly_mulmod(a, b, modulus, p):
    m = len(modulus) - 1
    prod = [0] * (2 * m)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(2 * m - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for i in range(m + 1):
                prod[deg - m + i] = (prod[deg - m + i] - c * modulus[i]) % p
    return prod[:m]


def root_order(modulus, p):
    m = len(modulus) - 1
    one = [1] + [0] * (m - 1)
    x = [0, 1] + [0] * (m - 2) if m > 1 else [(-modulus[0]) % p]
    cur, k = x, 1
    while cur != one:
        cur = poly_mulmod(cur, x, modulus, p)
        k += 1
        if k > p**m:
            return None
    return k


def test_make_field_trivial_examples():
    f3 = make_field(3, 1)
    assert f3.q == 3 and f3.generator == 2
    f2 = make_field(2, 1)
    assert f2.q == 2 and f2.generator == 1


def test_gf9_modulus_is_smallest_primitive_by_exhaustive_search():
    candidates = [(c0, c1, 1) for c0 in range(3) for c1 in range(3)]
    primitive = [f for f in candidates if root_order(f, 3) == 8]
    assert make_field(3, 2).modulus == min(primitive) == (2, 1, 1)
    gen = make_field(3, 2).generator
    assert gen ** 8 == 1 and all(gen**k != 1 for k in range(1, 8))


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 3), (5, 2), (7, 2)])
def test_modulus_search_matches_oracle(p, m):
    q = p**m
    prim = [low + (1,) for low in itertools.product(range(p), repeat=m)
            if root_order(low + (1,), p) == q - 1]
    assert make_field(p, m).modulus == min(prim)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 101])
def test_prime_field_generator_is_smallest_primitive_root(p):
    roots = [g for g in range(1, p) if len({pow(g, k, p) for k in range(p - 1)}) == p - 1]
    assert make_field(p, 1).generator == roots[0]


@pytest.mark.parametrize("p,m", [(4, 1), (1, 1), (3, 0), (2, 21), (1031, 2)])
def test_make_field_rejects_bad_parameters(p, m):
    with pytest.raises(FieldError):
        make_field(p, m)


def test_arith_examples():
    f3 = make_field(3, 1)
    assert arith("add", f3(2), f3(2)) == 1
    assert arith("div", f3(1), f3(2)) == 2
    f9 = make_field(3, 2)
    assert arith("pow", f9.generator, 8) == f9.one
    assert arith("pow", f9.generator, -1) * f9.generator == f9.one
    with pytest.raises(ZeroDivisionError):
        arith("div", f9.one, f9.zero)
    with pytest.raises(ZeroDivisionError):
        f9.zero ** -1
    with pytest.raises(FieldError):
        arith("add", f9.one, make_field(3, 1).one)


@pytest.mark.parametrize("p,m", [pm for pm in SMALL if pm[1] > 1])
def test_multiplication_matches_polynomial_oracle(p, m):
    f = make_field(p, m)
    xs = np.arange(f.q)
    table = f.mul(xs[:, None], xs[None, :])
    for a in range(f.q):
        for b in range(a, f.q):
            want = poly_mulmod(list(f.digits[a]), list(f.digits[b]), f.modulus, p)
            assert f.index_of(want) == table[a, b]


@pytest.mark.parametrize("p,m", SMALL)
def test_field_axioms_exhaustive(p, m):
    f = make_field(p, m)
    x = np.arange(f.q)
    a, b, c = np.meshgrid(x, x, x, indexing="ij")
    add, mul = f.add, f.mul
    assert np.array_equal(add(a, add(b, c)), add(add(a, b), c))
    assert np.array_equal(mul(a, mul(b, c)), mul(mul(a, b), c))
    assert np.array_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
    assert np.array_equal(add(a[..., 0], b[..., 0]), add(b[..., 0], a[..., 0]))
    assert np.array_equal(mul(a[..., 0], b[..., 0]), mul(b[..., 0], a[..., 0]))
    assert np.all(add(x, f.neg(x)) == 0)
    assert np.all(mul(x[1:], f.inv(x[1:])) == 1)
    assert np.all(add(x, 0) == x) and np.all(mul(x, 1) == x)


def test_trace_examples():
    assert trace(make_field(3, 2).zero) == 0
    assert trace(make_field(3, 2).one) == 2
    assert trace(make_field(3, 3).one) == 0


def test_norm_examples():
    f9 = make_field(3, 2)
    assert norm(f9.one) == 1
    assert norm(f9.generator) == 2
    assert norm(f9.zero) == 0


def test_quadratic_character_examples():
    f9 = make_field(3, 2)
    g = f9.generator
    assert quadratic_character(g * g) == 1
    assert quadratic_character(g) == -1
    assert quadratic_character(f9(2)) == 1
    assert quadratic_character(f9.zero) == 0
    with pytest.raises(DomainError):
        quadratic_character(make_field(2, 3).one)


def test_squares_examples():
    assert squares(make_field(3, 1)) == {make_field(3, 1)(0), make_field(3, 1)(1)}
    assert len(squares(make_field(3, 2))) == 5
    assert len(squares(make_field(5, 2))) == 13
    with pytest.raises(DomainError):
        squares(make_field(2, 2))


@pytest.mark.parametrize("p,m", SMALL)
def test_trace_norm_invariants(p, m):
    f = make_field(p, m)
    elems = f.elements()
    traces = [trace(x) for x in elems]
    assert traces == [int(f.trace_table[x.index]) for x in elems]
    assert [norm(x) for x in elems] == [int(f.norm_table[x.index]) for x in elems]
    x = np.arange(f.q)
    tr = f.trace_table
    # Z_p-linearity
    assert np.array_equal(tr[f.add(x[:, None], x[None, :])], (tr[:, None] + tr[None, :]) % p)
    for s in range(p):
        assert np.array_equal(tr[f.scale(s, x)], (s * tr) % p)
    # multiplicativity of the norm on GF(q)*
    nz = x[1:]
    nt = f.norm_table
    assert np.array_equal(nt[f.mul(nz[:, None], nz[None, :])], (nt[nz][:, None] * nt[nz][None, :]) % p)
    # both land in the prime subfield, i.e. are Frobenius-fixed
    for table in (tr, nt):
        assert np.array_equal(f.power_array(table, p), table)


@pytest.mark.parametrize("p,m", [pm for pm in SMALL if pm[0] > 2])
def test_quadratic_character_invariants(p, m):
    f = make_field(p, m)
    nz = np.arange(1, f.q)
    eta = f.eta_table
    assert np.array_equal(eta[f.mul(nz[:, None], nz[None, :])], eta[nz][:, None] * eta[nz][None, :])
    sq = squares(f)
    assert len(sq) == (f.q + 1) // 2
    assert {x for x in f.elements() if quadratic_character(x) == 1} == sq - {f.zero}
    image_counts = np.bincount(f.mul(nz, nz), minlength=f.q)
    assert set(image_counts[image_counts > 0]) == {2}


def test_field_tables_are_read_only():
    f = make_field(5, 2)
    with pytest.raises(ValueError):
        f.trace_table[0] = 1


def test_element_coordinates_and_equality():
    f = make_field(3, 2)
    g = f.generator
    assert g.coeffs == (0, 1)
    assert f((0, 1)) == g
    assert hash(f((0, 1))) == hash(g)
    assert f((1, 0)) == f.one

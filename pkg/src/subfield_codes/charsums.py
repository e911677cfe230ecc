"""Character sums over GF(q) and the exact solution counts built from them.

Complex values are plain Python ``complex`` in double precision; they are
only ever compared within a tolerance.  Everything that feeds a weight
distribution is an exact integer count.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .field import DomainError, FieldElement, FiniteField, FieldError

I_POWERS = (1, 1j, -1, -1j)


def _require_odd(field: FiniteField) -> None:
    if field.p == 2:
        raise DomainError("odd characteristic required")


def _zeta(p: int, t) -> complex:
    return cmath.exp(2j * math.pi * (int(t) % p) / p)


def legendre(c: int, p: int) -> int:
    """Quadratic character of c in GF(p); 0 at c = 0."""
    c %= p
    if c == 0:
        return 0
    return 1 if pow(c, (p - 1) // 2, p) == 1 else -1


def additive_char(field: FiniteField, a: FieldElement, x: FieldElement) -> complex:
    """chi_a(x) = zeta_p^Tr(a x)."""
    return _zeta(field.p, field.trace_table[field.mul(a.index, x.index)])


def additive_char_values(field: FiniteField, a: int = 1) -> np.ndarray:
    """chi_a evaluated at every element index 0..q-1."""
    xs = np.arange(field.q)
    t = field.trace_table[field.mul(np.full(field.q, a), xs)]
    return np.exp(2j * np.pi * t / field.p)


def multiplicative_char(field: FiniteField, j: int, x: FieldElement) -> complex:
    """psi_j(g^k) = exp(2 pi i j k / (q-1)) on nonzero x."""
    if not x:
        raise DomainError("multiplicative characters are defined on GF(q)* only")
    k = int(field.log[x.index])
    return cmath.exp(2j * math.pi * ((j * k) % (field.q - 1)) / (field.q - 1))


def gauss_sum_closed(field: FiniteField) -> complex:
    """Quadratic Gauss sum G(eta, chi_1) from its evaluation formula."""
    _require_odd(field)
    p, m = field.p, field.m
    sign = -1 if (m - 1) % 2 else 1
    i_exp = (((p - 1) // 2) ** 2 * m) % 4
    return sign * I_POWERS[i_exp] * math.sqrt(field.q)


def gauss_sum_numeric(field: FiniteField) -> complex:
    _require_odd(field)
    xs = np.arange(1, field.q)
    chi = additive_char_values(field)[xs]
    return complex(np.sum(field.eta_table[xs] * chi))


def weil_sum_quadratic(field: FiniteField, a2: FieldElement, a1: FieldElement,
                       a0: FieldElement) -> complex:
    """sum_x chi_1(a2 x^2 + a1 x + a0) via the completed-square formula."""
    _require_odd(field)
    if not a2:
        raise DomainError("leading coefficient a2 must be nonzero")
    four = field(4)
    shift = a0 - a1 * a1 / (four * a2)
    chi = _zeta(field.p, field.trace_table[shift.index])
    return chi * int(field.eta_table[a2.index]) * gauss_sum_closed(field)


def weil_sum_direct(field: FiniteField, a2: FieldElement, a1: FieldElement,
                    a0: FieldElement) -> complex:
    _require_odd(field)
    if not a2:
        raise DomainError("leading coefficient a2 must be nonzero")
    xs = np.arange(field.q)
    fx = field.add(field.add(field.mul(a2.index, field.mul(xs, xs)), field.mul(a1.index, xs)),
                   a0.index)
    return complex(np.sum(additive_char_values(field)[fx]))


@dataclass(frozen=True)
class CountQuadruple:
    """Nonzero a split by (square?, trace zero?)."""

    sq_tr0: int
    sq_trx: int
    nsq_tr0: int
    nsq_trx: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.sq_tr0, self.sq_trx, self.nsq_tr0, self.nsq_trx)

    @property
    def total(self) -> int:
        return sum(self.as_tuple())


def _half(num: int) -> int:
    if num % 2:
        raise ArithmeticError(f"closed form produced a non-integer ({num}/2)")
    return num // 2


def lemma31_counts(field: FiniteField) -> CountQuadruple:
    """Closed-form counts of nonzero squares / nonsquares with zero / nonzero trace."""
    _require_odd(field)
    p, m = field.p, field.m
    if m % 2:
        tr0 = _half(p ** (m - 1) - 1)
        trx = _half(p ** (m - 1) * (p - 1))
        return CountQuadruple(tr0, trx, tr0, trx)
    s = (-1) ** ((p - 1) * m // 4)
    t = (p - 1) * p ** ((m - 2) // 2) * s
    u = p ** ((m - 2) // 2) * s
    return CountQuadruple(
        _half(p ** (m - 1) - 1 - t),
        _half((p - 1) * (p ** (m - 1) + u)),
        _half(p ** (m - 1) - 1 + t),
        _half((p - 1) * (p ** (m - 1) - u)),
    )


def lemma31_counts_enumerated(field: FiniteField) -> CountQuadruple:
    _require_odd(field)
    xs = np.arange(1, field.q)
    sq = field.eta_table[xs] == 1
    tr0 = field.trace_table[xs] == 0
    return CountQuadruple(
        int(np.count_nonzero(sq & tr0)),
        int(np.count_nonzero(sq & ~tr0)),
        int(np.count_nonzero(~sq & tr0)),
        int(np.count_nonzero(~sq & ~tr0)),
    )


def n0_c1(field: FiniteField, a: FieldElement, b: FieldElement, c: int) -> int:
    """#{(x, y) : x in U, y in GF(q), Tr(ax + by) + c = 0}, closed form."""
    _require_odd(field)
    p, m = field.p, field.m
    c %= p
    if not a and not b:
        return _half(p ** (2 * m) + p**m) if c == 0 else 0
    if b:
        return _half(p ** (2 * m - 1) + p ** (m - 1))
    eta_a = int(field.eta_table[a.index])
    if m % 2:
        if c == 0:
            return _half(p ** (2 * m - 1) + p**m)
        s = (-1) ** ((p - 1) * (m + 1) // 4)
        return _half(p ** (2 * m - 1) + eta_a * legendre(c, p) * s * p ** ((3 * m - 1) // 2))
    s = (-1) ** (m * (p - 1) // 4)
    if c == 0:
        return _half(p ** (2 * m - 1) + p**m - eta_a * (p - 1) * p ** ((3 * m - 2) // 2) * s)
    return _half(p ** (2 * m - 1) + eta_a * s * p ** ((3 * m - 2) // 2))


def _count_trace_zero(field: FiniteField, left: np.ndarray, right: np.ndarray, c: int) -> int:
    """#{(u, v) in left x right : Tr(u + v) + c = 0}, summing in the field before tracing."""
    sums = field.add(left[:, None], right[None, :])
    return int(np.count_nonzero((field.trace_table[sums] + c) % field.p == 0))


def n0_c1_direct(field: FiniteField, a: FieldElement, b: FieldElement, c: int) -> int:
    _require_odd(field)
    us = field.square_indices()
    ys = np.arange(field.q)
    return _count_trace_zero(field, field.mul(a.index, us), field.mul(b.index, ys), c)


def n0_c1_full_square(field: FiniteField, a: FieldElement, b: FieldElement, c: int) -> int:
    """#{(x, y) in GF(q)^2 : Tr(a x^2 + b y) + c = 0}."""
    xs = np.arange(field.q)
    return _count_trace_zero(field, field.mul(a.index, field.mul(xs, xs)),
                             field.mul(b.index, xs), c)


def n0_c1_at_zero(field: FiniteField, b: FieldElement, c: int) -> int:
    """#{y : Tr(b y) + c = 0}, i.e. the x = 0 slice."""
    ys = np.arange(field.q)
    return int(np.count_nonzero((field.trace_table[field.mul(b.index, ys)] + c) % field.p == 0))


def n0_c2(field: FiniteField, a: FieldElement, b: FieldElement, c: int) -> int:
    """#{(x, y) : x in GF(q)*, y in GF(q), Tr(a Norm(x) + b y) + c = 0}, closed form (m = 2).

    The a != 0, b = 0, c != 0 branch counts p^2(p+1) solutions exactly when
    Tr(a) != 0 and none when Tr(a) = 0.
    """
    if field.m != 2:
        raise FieldError("n0_c2 is only defined for m = 2")
    p = field.p
    c %= p
    full = p * p * (p * p - 1)
    if not a and not b:
        return full if c == 0 else 0
    if b:
        return p * (p * p - 1)
    if field.trace_table[a.index] == 0:
        return full if c == 0 else 0
    return 0 if c == 0 else p * p * (p + 1)


def n0_c2_direct(field: FiniteField, a: FieldElement, b: FieldElement, c: int) -> int:
    if field.m != 2:
        raise FieldError("n0_c2 is only defined for m = 2")
    xs = np.arange(1, field.q)
    ys = np.arange(field.q)
    norms = field.power_array(xs, field.p + 1)
    return _count_trace_zero(field, field.mul(a.index, norms), field.mul(b.index, ys), c)

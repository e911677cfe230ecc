"""Exact arithmetic in GF(p^m).

Elements are stored internally as integers ``0 <= i < q`` whose base-p
digits (least significant first) are the coordinates in the polynomial
basis ``1, a, ..., a^(m-1)``.  Multiplication goes through log/antilog
tables; addition is digit-wise mod p.  All tables are built once in the
constructor and frozen, so a field can be shared between threads.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

FIELD_SIZE_CAP = 1 << 20


class FieldError(ValueError):
    """Invalid field parameters or mismatched operands."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending (trial division)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise FieldError(f"no primitive root mod {p}")  # unreachable for prime p


def _matpow(mat: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(mat.shape[0], dtype=np.int64)
    base = mat % p
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def _times_root_matrix(low: Sequence[int], p: int) -> np.ndarray:
    """Matrix of multiplication by the root of x^m + low(x), acting on row vectors."""
    m = len(low)
    mat = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        mat[i, i + 1] = 1
    mat[m - 1, :] = [(-c) % p for c in low]
    return mat


def _root_order_is_full(low: Sequence[int], p: int, q: int, factors: Iterable[int]) -> bool:
    mat = _times_root_matrix(low, p)
    one = np.zeros(len(low), dtype=np.int64)
    one[0] = 1

    def root_pow(e):
        return (one @ _matpow(mat, e, p)) % p

    if not np.array_equal(root_pow(q - 1), one):
        return False
    return all(not np.array_equal(root_pow((q - 1) // r), one) for r in factors)


def find_primitive_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree m over Z_p.

    Coefficients are returned constant term first, including the leading 1.
    """
    q = p**m
    factors = prime_factors(q - 1) if q > 2 else []
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        if _root_order_is_full(low, p, q, factors):
            return tuple(low) + (1,)
    raise FieldError(f"no primitive polynomial of degree {m} over GF({p})")


class FieldElement:
    """One element of a :class:`FiniteField`."""

    __slots__ = ("field", "index")

    def __init__(self, field: FiniteField, index: int):
        self.field = field
        self.index = int(index)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.digits[self.index])

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError("operands belong to different fields")
            return other.index
        if isinstance(other, (int, np.integer)):
            return self.field.from_int(int(other))
        return NotImplemented

    def _wrap(self, index: int) -> FieldElement:
        return FieldElement(self.field, index)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.index, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.index))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.index, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.index))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __pow__(self, e: int):
        return self._wrap(self.field.power(self.index, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.index == other.index
        if isinstance(other, (int, np.integer)):
            return self.index == self.field.from_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.index))

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        if self.field.m == 1:
            return f"GF({self.field.p})({self.index})"
        return f"GF({self.field.q})({list(self.coeffs)})"


class FiniteField:
    """GF(p^m) with precomputed log/antilog, trace, norm and character tables."""

    def __init__(self, p: int, m: int, modulus: Sequence[int], generator_matrix: np.ndarray):
        self.p = p
        self.m = m
        self.q = q = p**m
        self.modulus = tuple(modulus)
        self.powers_of_p = p ** np.arange(m, dtype=np.int64)

        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self.powers_of_p[None, :]) % p

        # antilog table: row k holds the coordinates of g^k
        n = q - 1
        block = min(n, 1024)
        exp_digits = np.zeros((n, m), dtype=np.int64)
        exp_digits[0, 0] = 1
        for k in range(1, block):
            exp_digits[k] = (exp_digits[k - 1] @ generator_matrix) % p
        if block < n:
            jump = _matpow(generator_matrix, block, p)
            for start in range(block, n, block):
                stop = min(start + block, n)
                exp_digits[start:stop] = (exp_digits[start - block : stop - block] @ jump) % p
        self.exp = exp_digits @ self.powers_of_p
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(n, dtype=np.int64)
        if np.count_nonzero(self.log[1:] < 0):
            raise FieldError("generator is not primitive")

        self.neg_table = ((-self.digits) % p) @ self.powers_of_p
        self.trace_table = self._trace_by_definition()
        self.norm_table = self._norm_by_definition()
        self.eta_table = np.where(idx == 0, 0, np.where(self.log % 2 == 0, 1, -1))
        if p == 2:
            # every element of GF(2^m) is a square; eta is never used there
            self.eta_table = np.where(idx == 0, 0, 1)

        for arr in (self.digits, self.exp, self.log, self.neg_table,
                    self.trace_table, self.norm_table, self.eta_table):
            arr.flags.writeable = False

    # ------------------------------------------------------------------ tables

    def power_array(self, xs: np.ndarray, e: int) -> np.ndarray:
        """x -> x^e for an array of element indices (0 maps to 0 for e > 0)."""
        n = self.q - 1
        safe = np.where(xs == 0, 0, self.log[xs])
        out = self.exp[(safe * (e % n)) % n]
        return np.where(xs == 0, 0, out)

    def _trace_by_definition(self) -> np.ndarray:
        xs = np.arange(self.q, dtype=np.int64)
        acc = np.zeros((self.q, self.m), dtype=np.int64)
        for i in range(self.m):
            acc += self.digits[self.power_array(xs, self.p**i)]
        acc %= self.p
        if np.any(acc[:, 1:]):
            raise FieldError("trace left the prime subfield")
        return acc[:, 0].copy()

    def _norm_by_definition(self) -> np.ndarray:
        xs = np.arange(self.q, dtype=np.int64)
        vals = self.power_array(xs, (self.q - 1) // (self.p - 1))
        if np.any(vals >= self.p):
            raise FieldError("norm left the prime subfield")
        return vals

    # ---------------------------------------------------------- index arithmetic

    def from_int(self, value: int) -> int:
        """Index of the prime-subfield element ``value mod p``."""
        return value % self.p

    def add(self, a, b):
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.powers_of_p

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg_table[b])

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        n = self.q - 1
        zero = (a == 0) | (b == 0)
        la = np.where(a == 0, 0, self.log[a])
        lb = np.where(b == 0, 0, self.log[b])
        out = np.where(zero, 0, self.exp[(la + lb) % n])
        return out[()] if out.ndim == 0 else out

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        out = self.exp[(-self.log[a]) % (self.q - 1)]
        return out[()] if out.ndim == 0 else out

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        a = int(a)
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def scale(self, s: int, a):
        """Multiply element(s) by the prime-subfield scalar s."""
        return ((self.digits[a] * (s % self.p)) % self.p) @ self.powers_of_p

    def index_of(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.m:
            raise FieldError(f"expected {self.m} coordinates, got {len(coeffs)}")
        return int(sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs)))

    # ------------------------------------------------------------ element API

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.from_int(int(value)))
        return FieldElement(self, self.index_of(value))

    def element(self, index: int) -> FieldElement:
        if not 0 <= index < self.q:
            raise FieldError(f"index {index} out of range for GF({self.q})")
        return FieldElement(self, index)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, int(self.exp[1 % (self.q - 1)]))

    def ordered_indices(self) -> np.ndarray:
        """0 followed by g^0, g^1, ..., g^(q-2)."""
        return np.concatenate(([0], self.exp)).astype(np.int64)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, int(i)) for i in self.ordered_indices()]

    def square_indices(self) -> np.ndarray:
        """Indices of U = {x^2}, in generator-power order with 0 first."""
        if self.p == 2:
            raise DomainError("the square set is all of GF(2^m); odd characteristic required")
        ordered = self.ordered_indices()
        image = set(self.mul(ordered, ordered).tolist())
        return np.array([i for i in ordered if int(i) in image], dtype=np.int64)

    def __len__(self):
        return self.q

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FiniteField:
    """Build GF(p^m) with the lexicographically smallest primitive modulus.

    For m >= 2 the generator is the class of the indeterminate; for m = 1 it
    is the smallest primitive root mod p.
    """
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise FieldError(f"p must be prime, got {p!r}")
    if m < 1:
        raise FieldError(f"degree m must be >= 1, got {m}")
    if p**m > FIELD_SIZE_CAP:
        raise FieldError(f"GF({p}^{m}) exceeds the table size cap {FIELD_SIZE_CAP}")
    p, m = int(p), int(m)
    modulus = find_primitive_modulus(p, m)
    if m == 1:
        gen_matrix = np.array([[smallest_primitive_root(p)]], dtype=np.int64)
    else:
        gen_matrix = _times_root_matrix(modulus[:-1], p)
    return FiniteField(p, m, modulus, gen_matrix)


def _check(x: FieldElement, y) -> None:
    if isinstance(y, FieldElement) and x.field is not y.field:
        raise FieldError("operands belong to different fields")


def arith(kind: str, a: FieldElement, b) -> FieldElement:
    """Apply ``add``, ``sub``, ``mul``, ``div`` or ``pow`` to field elements."""
    if kind == "pow":
        return a ** int(b)
    _check(a, b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def trace(x: FieldElement) -> int:
    """Absolute trace x + x^p + ... + x^(p^(m-1)), as an integer in [0, p)."""
    f = x.field
    acc = f.zero
    for i in range(f.m):
        acc = acc + x ** (f.p**i)
    if acc.index >= f.p:
        raise FieldError("trace left the prime subfield")
    return acc.index


def norm(x: FieldElement) -> int:
    """x^((q-1)/(p-1)) as an integer in [0, p); norm(0) = 0."""
    f = x.field
    if not x:
        return 0
    val = x ** ((f.q - 1) // (f.p - 1))
    if val.index >= f.p:
        raise FieldError("norm left the prime subfield")
    return val.index


def quadratic_character(x: FieldElement) -> int:
    f = x.field
    if not x:
        return 0
    if f.p == 2:
        raise DomainError("the quadratic character is undefined in characteristic 2")
    return 1 if int(f.log[x.index]) % 2 == 0 else -1


def squares(field: FiniteField) -> set[FieldElement]:
    """U = {x^2 : x in GF(q)}, zero included."""
    if field.p == 2:
        raise DomainError("the square set is all of GF(2^m); odd characteristic required")
    return {x * x for x in field.elements()}

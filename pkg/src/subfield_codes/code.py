"""Generic linear-code machinery over GF(p^m) and its prime subfield."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .field import FieldElement, FieldError, FiniteField, make_field

DEFAULT_BUDGET = 1 << 26
_CHUNK = 4096


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class MomentError(ValueError):
    """The power-moment identities have no non-negative integral solution."""


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n matrix of element indices over ``field``."""

    field: FiniteField
    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] < 1 or e.shape[1] < 1:
            raise ValueError(f"generator matrix must be k x n with k, n >= 1, got {e.shape}")
        if e.min() < 0 or e.max() >= self.field.q:
            raise FieldError("entry outside the field")
        e.flags.writeable = False
        object.__setattr__(self, "entries", e)

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[FieldElement]]) -> GeneratorMatrix:
        fld = rows[0][0].field
        if any(x.field is not fld for row in rows for x in row):
            raise FieldError("entries belong to different fields")
        return cls(fld, np.array([[x.index for x in row] for row in rows]))

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def element(self, i: int, j: int) -> FieldElement:
        return self.field.element(int(self.entries[i, j]))


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    k: int
    p: int
    counts: dict[int, int] = dc_field(default_factory=dict)

    def __post_init__(self):
        counts = {int(w): int(c) for w, c in sorted(self.counts.items()) if c}
        object.__setattr__(self, "counts", counts)
        if counts.get(0) != 1:
            raise ValueError("a linear code has exactly one word of weight 0")
        if any(w < 0 or w > self.n for w in counts):
            raise ValueError("weight outside [0, n]")
        if sum(counts.values()) != self.p**self.k:
            raise ValueError(f"multiplicities sum to {sum(counts.values())}, not {self.p}^{self.k}")

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w in self.counts if w]

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)


@dataclass(frozen=True)
class DualReport:
    n: int
    k_dual: int
    a1: int
    a2: int
    a3: int
    d_perp_lower: int | None  # None means "at least 4"
    flags: frozenset[str] = frozenset()


# ----------------------------------------------------------------- row reduction

def row_reduce(field: FiniteField, entries: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over ``field``; zero rows are dropped."""
    a = np.array(entries, dtype=np.int64)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        a[[r, piv]] = a[[piv, r]]
        a[r] = field.mul(field.inv(int(a[r, c])), a[r])
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = field.sub(a[i], field.mul(int(a[i, c]), a[r]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(G: GeneratorMatrix) -> int:
    return len(row_reduce(G.field, G.entries)[1])


# ------------------------------------------------------------ subfield expansion

def polynomial_basis(field: FiniteField) -> list[FieldElement]:
    return [field.element(field.p**i) for i in range(field.m)]


def coordinate_map(field: FiniteField, basis: Sequence[FieldElement]) -> np.ndarray:
    """q x m array: row x holds the coordinates of element x in ``basis``."""
    if len(basis) != field.m:
        raise FieldError(f"a basis of GF({field.q}) over GF({field.p}) has {field.m} elements")
    prime = make_field(field.p, 1)
    bmat = np.array([field.digits[b.index] for b in basis], dtype=np.int64)
    # solve coords @ bmat = digits by reducing [bmat^T | I]
    aug = np.concatenate([bmat.T, np.eye(field.m, dtype=np.int64)], axis=1)
    red, piv = row_reduce(prime, aug)
    if piv[: field.m] != list(range(field.m)):
        raise FieldError("basis elements are linearly dependent over the prime field")
    inv_bt = red[:, field.m:]
    return (field.digits @ inv_bt.T) % field.p


def subfield_expand(G: GeneratorMatrix, basis: Sequence[FieldElement] | None = None) -> GeneratorMatrix:
    """Replace each entry by its coordinate column; yields a km x n matrix over GF(p)."""
    fld = G.field
    if basis is None:
        basis = polynomial_basis(fld)
    coords = coordinate_map(fld, basis)
    k, n = G.shape
    out = coords[G.entries]              # k x n x m
    out = out.transpose(0, 2, 1).reshape(k * fld.m, n)
    return GeneratorMatrix(make_field(fld.p, 1), out)


def trace_code_enumerate(G: GeneratorMatrix) -> Iterator[np.ndarray]:
    """Yield (Tr(sum_i a_i g_ij))_j for every (a_1..a_k) in GF(q)^k, in lexicographic order."""
    fld = G.field
    k, n = G.shape
    total = fld.q**k
    for start in range(0, total, _CHUNK):
        msgs = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        acc = np.zeros((msgs.size, n), dtype=np.int64)
        for i in range(k):
            a_i = (msgs // fld.q ** (k - 1 - i)) % fld.q
            acc = fld.add(acc, fld.mul(a_i[:, None], G.entries[i][None, :]))
        yield from fld.trace_table[acc]


# --------------------------------------------------------- weight distributions

def _prime_basis(G: GeneratorMatrix) -> np.ndarray:
    if G.field.m != 1:
        raise FieldError("expected a matrix over a prime field; expand it first")
    return row_reduce(G.field, G.entries)[0]


def _message_block(p: int, r: int, start: int, stop: int) -> np.ndarray:
    msgs = np.arange(start, stop, dtype=np.int64)
    return (msgs[:, None] // (p ** np.arange(r, dtype=np.int64))[None, :]) % p


def weight_distribution(G: GeneratorMatrix, budget: int = DEFAULT_BUDGET,
                        threads: int = 1) -> WeightDistribution:
    """Exact weight distribution by enumerating p^rank messages of a reduced basis."""
    p = G.field.p
    basis = _prime_basis(G)
    r, n = basis.shape[0], G.n
    total = p**r
    if total > budget:
        raise BudgetExceeded(f"{p}^{r} codewords exceed the enumeration budget {budget}")

    def count(span: tuple[int, int]) -> np.ndarray:
        hist = np.zeros(n + 1, dtype=np.int64)
        for s in range(span[0], span[1], _CHUNK):
            msgs = _message_block(p, r, s, min(s + _CHUNK, span[1]))
            words = (msgs @ basis) % p if r else np.zeros((msgs.shape[0], n), dtype=np.int64)
            hist += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
        return hist

    threads = max(1, int(threads))
    step = -(-total // threads)
    spans = [(s, min(s + step, total)) for s in range(0, total, step)]
    if threads == 1:
        hist = count(spans[0])
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hist = sum(pool.map(count, spans))
    return WeightDistribution(n=n, k=r, p=p, counts={w: int(c) for w, c in enumerate(hist) if c})


def min_distance(wd: WeightDistribution) -> int:
    nz = wd.nonzero_weights
    if not nz:
        raise ValueError("minimum distance is undefined for the zero code")
    return nz[0]


# ------------------------------------------------------------- dual analysis

def _integral(x: Fraction, name: str) -> int:
    if x.denominator != 1 or x < 0:
        raise MomentError(f"{name} solved to {x}, not a non-negative integer")
    return int(x)


def pless_dual_a123(wd: WeightDistribution, p: int) -> tuple[int, int, int]:
    """Solve the first four power moments for A1, A2, A3 of the dual code."""
    n, k = wd.n, wd.k
    s = [sum(Fraction(i**t * a) for i, a in wd.counts.items()) for t in range(4)]
    if s[0] != p**k:
        raise MomentError(f"sum of A_i is {s[0]}, expected {p}^{k}")
    pk = Fraction(p) ** k

    a1 = _integral(p * n - n - s[1] * p / pk, "A1")
    a2 = _integral(
        (s[2] * p**2 / pk - (p - 1) * n * (p * n - n + 1) + (2 * p * n - p - 2 * n + 2) * a1) / 2,
        "A2")
    cubic = (p - 1) * n * (p**2 * n**2 - 2 * p * n**2 + 3 * p * n - p + n**2 - 3 * n + 2)
    lin_a1 = (3 * p**2 * n**2 - 3 * p**2 * n - 6 * p * n**2 + 12 * p * n
              + p**2 - 6 * p + 3 * n**2 - 9 * n + 6)
    a3 = _integral(
        (cubic - lin_a1 * a1 + 6 * (p * n - p - n + 2) * a2 - s[3] * p**3 / pk) / 6,
        "A3")
    return a1, a2, a3


def low_weight_dual_count(G: GeneratorMatrix, w: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of dual codewords of weight exactly w (1 <= w <= 3), by column search.

    Dual words are counted as vectors, so every projective solution
    contributes its p - 1 scalar multiples.
    """
    if w not in (1, 2, 3):
        raise ValueError("only weights 1, 2, 3 are supported")
    p = G.field.p
    cols = _prime_basis(G).T                  # n x r
    n, r = cols.shape
    place = p ** np.arange(r, dtype=np.int64)
    zero = ~cols.any(axis=1)
    if w == 1:
        return int(zero.sum()) * (p - 1)

    pairs = math.comb(n, 2)
    work = pairs * (p - 1) ** (w - 1)
    if work > budget:
        raise BudgetExceeded(f"weight-{w} search needs {work} steps, budget {budget}")
    I, J = np.triu_indices(n, k=1)
    scalars = np.arange(1, p, dtype=np.int64)

    if w == 2:
        # normalise the first coefficient to 1: g_i + c g_j = 0
        hits = 0
        for c in scalars:
            v = (cols[I] + c * cols[J]) % p
            hits += int(np.count_nonzero(~v.any(axis=1)))
        return hits * (p - 1)

    # w == 3: for each pair (i, j) with coefficients (1, c), count positions l
    # outside {i, j} and scalars c_l with c_l g_l = -(g_i + c g_j).  Each
    # projective weight-3 word is met once per pair in its support.
    codes = cols @ place
    multiples = (scalars[:, None, None] * cols[None, :, :]) % p @ place   # (p-1) x n
    by_code = np.bincount(codes, minlength=p**r)
    n_zero = int(zero.sum())
    total = 0
    for c in scalars:
        v = (-(cols[I] + c * cols[J])) % p
        vz = ~v.any(axis=1)
        vcode = v @ place
        scaled = (scalars[:, None, None] * v[None, :, :]) % p @ place      # (p-1) x P
        hits = by_code[scaled].sum(axis=0)
        hits -= (multiples[:, I] == vcode[None, :]).any(axis=0)
        hits -= (multiples[:, J] == vcode[None, :]).any(axis=0)
        zero_hits = (n_zero - zero[I].astype(np.int64) - zero[J]) * (p - 1)
        total += int(np.where(vz, zero_hits, hits).sum())
    if total % 3:
        raise ArithmeticError("weight-3 pair count is not divisible by 3")
    return total // 3 * (p - 1)


def dual_distance_by_columns(G: GeneratorMatrix) -> int | None:
    """Smallest number of linearly dependent columns, i.e. d of the dual; None if the dual is {0}."""
    fld = G.field
    n = G.n
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if len(row_reduce(fld, G.entries[:, subset])[1]) < size:
                return size
    return None


# ------------------------------------------------------------- sphere packing

def hamming_ball(n: int, q: int, radius: int) -> int:
    return sum((q - 1) ** i * math.comb(n, i) for i in range(radius + 1))


def sphere_packing(mode: str, n: int, q: int, fixed: int) -> int:
    """Largest k (given d) or largest d (given k) allowed by q^k |B(n, (d-1)//2)| <= q^n."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    total = q**n
    if mode == "max_k_given_d":
        vol = hamming_ball(n, q, (fixed - 1) // 2)
        k = n
        while k > 0 and q**k * vol > total:
            k -= 1
        return k
    if mode == "max_d_given_k":
        if q**fixed > total:
            return 0
        d = 1
        while d < n and q**fixed * hamming_ball(n, q, d // 2) <= total:
            d += 1
        return d
    raise ValueError(f"unknown mode {mode!r}")


def classify(n: int, k: int, d: int, q: int) -> frozenset[str]:
    flags = set()
    if d == n - k + 1:
        flags.add("mds")
    if d == n - k:
        flags.add("almost_mds")
    if k == sphere_packing("max_k_given_d", n, q, d):
        flags.add("dimension_optimal")
    if d == sphere_packing("max_d_given_k", n, q, k):
        flags.add("distance_optimal")
    return frozenset(flags)


def dual_report(wd: WeightDistribution) -> DualReport:
    """Dual parameters inferred from the primal distribution via the power moments."""
    a1, a2, a3 = pless_dual_a123(wd, wd.p)
    d_perp = next((w for w, a in ((1, a1), (2, a2), (3, a3)) if a), None)
    k_dual = wd.n - wd.k
    flags = classify(wd.n, k_dual, d_perp, wd.p) if d_perp is not None else frozenset()
    return DualReport(wd.n, k_dual, a1, a2, a3, d_perp, flags)

"""The two code families C1 (x over the squares) and C2 (Norm(x)), with their
closed-form weight distributions and claimed parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .code import GeneratorMatrix, WeightDistribution
from .field import DomainError, FieldError, is_prime, make_field

FAMILIES = ("c1", "c2")


def _check_family(family: str, p: int, m: int) -> None:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not is_prime(p):
        raise FieldError(f"p must be prime, got {p}")
    if family == "c1":
        if p == 2:
            raise DomainError("family c1 requires odd p")
        if m < 1:
            raise FieldError("m must be >= 1")
    elif m != 2:
        raise DomainError("family c2 requires m = 2")


def code_length(family: str, p: int, m: int) -> int:
    q = p**m
    if family == "c1":
        return (q * q + q) // 2 + 2
    return q * (q - 1) + 2


def _with_unit_columns(top: np.ndarray, mid: np.ndarray) -> np.ndarray:
    body = np.vstack([top, mid, np.ones_like(top)])
    units = np.array([[1, 0], [0, 1], [0, 0]], dtype=np.int64)
    return np.hstack([body, units])


def build_c1(p: int, m: int = 1) -> GeneratorMatrix:
    """Columns (x, y, 1) for x in U, y in GF(q), then (1,0,0) and (0,1,0)."""
    _check_family("c1", p, m)
    fld = make_field(p, m)
    us = fld.square_indices()
    ys = fld.ordered_indices()
    top = np.repeat(us, ys.size)
    mid = np.tile(ys, us.size)
    return GeneratorMatrix(fld, _with_unit_columns(top, mid))


def build_c2(p: int) -> GeneratorMatrix:
    """Columns (Norm(x), y, 1) for x in GF(p^2)*, y in GF(p^2), then (1,0,0) and (0,1,0)."""
    _check_family("c2", p, 2)
    fld = make_field(p, 2)
    xs = fld.ordered_indices()[1:]
    ys = fld.ordered_indices()
    top = np.repeat(fld.power_array(xs, p + 1), ys.size)
    mid = np.tile(ys, xs.size)
    return GeneratorMatrix(fld, _with_unit_columns(top, mid))


def build(family: str, p: int, m: int) -> GeneratorMatrix:
    return build_c1(p, m) if family == "c1" else (_check_family("c2", p, m) or build_c2(p))


def _collect(rows, n: int, k: int, p: int) -> WeightDistribution:
    counts: Counter[int] = Counter()
    for weight, mult in rows:
        if mult < 0:
            raise ArithmeticError(f"negative multiplicity {mult} at weight {weight}")
        if mult:
            counts[weight] += mult
    return WeightDistribution(n=n, k=k, p=p, counts=dict(counts))


def _exact_half(x: int) -> int:
    if x % 2:
        raise ArithmeticError(f"table entry {x}/2 is not an integer")
    return x // 2


def c1_table_rows(p: int, m: int) -> list[tuple[int, int]]:
    """(weight, multiplicity) rows of the C1 table for (p, m), unmerged."""
    _check_family("c1", p, m)
    h = _exact_half
    P2, Pm = p ** (2 * m), p**m
    P2m1, Pm1 = p ** (2 * m - 1), p ** (m - 1)
    base = h(P2 + Pm - P2m1 - Pm1)
    rows = [
        (0, 1),
        (h(P2 + Pm), p - 1),
        (base, (Pm1 - 1) * Pm),
        (base + 1, (Pm - Pm1) * (2 * Pm - p)),
        (base + 2, p * (Pm - Pm1) ** 2),
    ]
    if m % 2:
        s = (-1) ** ((m + 1) * (p - 1) // 4)
        t = p ** ((3 * m - 1) // 2) * s
        low, high = h(P2 + Pm - P2m1 - t), h(P2 + Pm - P2m1 + t)
        rows += [
            (h(P2 - P2m1), Pm1 - 1),
            (h(P2 - P2m1) + 1, Pm - Pm1),
            (low, h((Pm1 - 1) * (p - 1))),
            (low + 1, h(Pm1 * (p - 1) ** 2)),
            (high, h((Pm1 - 1) * (p - 1))),
            (high + 1, h(Pm1 * (p - 1) ** 2)),
        ]
        return rows
    s = (-1) ** (m * (p - 1) // 4)
    big = (p - 1) * p ** ((3 * m - 2) // 2) * s
    mid = p ** ((3 * m - 2) // 2) * s
    small = p ** ((m - 2) // 2) * s           # (sqrt(-1))^((p-1)m/2) == s for even m
    w1, w2 = h(P2 - P2m1 + big), h(P2 - P2m1 - big)
    w3, w4 = h(P2 + Pm - P2m1 - mid), h(P2 + Pm - P2m1 + mid)
    rows += [
        (w1, h(Pm1 - 1 - (p - 1) * small)),
        (w1 + 1, h((p - 1) * (Pm1 + small))),
        (w2, h(Pm1 - 1 + (p - 1) * small)),
        (w2 + 1, h((p - 1) * (Pm1 - small))),
        (w3, h((p - 1) * (Pm1 - 1 - (p - 1) * small))),
        (w3 + 1, h((p - 1) ** 2 * (Pm1 + small))),
        (w4, h((p - 1) * (Pm1 - 1 + (p - 1) * small))),
        (w4 + 1, h((p - 1) ** 2 * (Pm1 - small))),
    ]
    return rows


def closed_form_wd_c1(p: int, m: int = 1) -> WeightDistribution:
    rows = c1_table_rows(p, m)
    return _collect(rows, code_length("c1", p, m), 2 * m + 1, p)


def c2_table_rows(p: int) -> list[tuple[int, int]]:
    _check_family("c2", p, 2)
    w = p * p * (p * p - 1)
    v = (p * p - p) * (p * p - 1)
    return [
        (0, 1),
        (w, p - 1),
        (w + 1, p - 1),
        (v, p * (p - 1)),
        (v + 1, p * (p - 1) * (2 * p - 1)),
        (v + 2, (p * p - p) ** 2),
        (p * p * (p + 1) * (p - 2) + 1, (p - 1) ** 2),
    ]


def closed_form_wd_c2(p: int) -> WeightDistribution:
    return _collect(c2_table_rows(p), code_length("c2", p, 2), 4, p)


def closed_form_wd(family: str, p: int, m: int) -> WeightDistribution:
    _check_family(family, p, m)
    return closed_form_wd_c1(p, m) if family == "c1" else closed_form_wd_c2(p)


@dataclass(frozen=True)
class ClaimSet:
    """Parameters asserted for a family instance, primal and dual."""

    family: str
    p: int
    m: int
    n: int
    k: int
    d: int
    k_dual: int
    d_dual: int
    dual_flags: frozenset[str]
    weights: WeightDistribution


def expected_claims(family: str, p: int, m: int) -> ClaimSet:
    _check_family(family, p, m)
    n = code_length(family, p, m)
    if family == "c1":
        k = 2 * m + 1
        if m == 1:
            d = (p * p - p + 2) // 2
            flags = {"dimension_optimal", "almost_mds"}
        elif m % 2:
            d = (p ** (2 * m) + p**m - p ** (2 * m - 1) - p ** ((3 * m - 1) // 2)) // 2
            flags = {"dimension_optimal"}
        else:
            d = (p ** (2 * m) - p ** (2 * m - 1) - (p - 1) * p ** ((3 * m - 2) // 2)) // 2
            flags = {"dimension_optimal"}
        d_dual = 3
    else:
        k = 4
        d = p * p * (p + 1) * (p - 2) + 1
        d_dual = 2
        # the p = 2 dual claim rests on an external table only
        flags = {"distance_optimal"} if p > 2 else set()
    return ClaimSet(family, p, m, n, k, d, n - k, d_dual, frozenset(flags),
                    closed_form_wd(family, p, m))

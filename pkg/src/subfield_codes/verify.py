"""Cross-check closed forms and claimed parameters against exhaustive computation."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import code
from .constructions import build, expected_claims


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class VerifyReport:
    family: str
    p: int
    m: int
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected, computed) -> None:
        self.checks.append(Check(name, expected, computed))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_family(family: str, p: int, m: int, budget: int = code.DEFAULT_BUDGET,
                  threads: int = 1) -> VerifyReport:
    claims = expected_claims(family, p, m)
    G = build(family, p, m)
    expanded = code.subfield_expand(G)
    wd = code.weight_distribution(expanded, budget=budget, threads=threads)
    rep = VerifyReport(family, p, m)

    rep.add("length n", claims.n, expanded.n)
    rep.add("dimension k", claims.k, wd.k)
    rep.add("minimum distance d", claims.d, code.min_distance(wd))
    rep.add("closed-form minimum weight", claims.d, code.min_distance(claims.weights))
    rep.add("weight distribution", claims.weights.counts, wd.counts)

    dual = code.dual_report(wd)
    oracle = tuple(code.low_weight_dual_count(expanded, w, budget=budget) for w in (1, 2, 3))
    rep.add("dual dimension", claims.k_dual, dual.k_dual)
    for w, moment, direct in zip((1, 2, 3), (dual.a1, dual.a2, dual.a3), oracle):
        rep.add(f"A{w} dual (moments vs column search)", direct, moment)
    rep.add("dual minimum distance", claims.d_dual, dual.d_perp_lower)
    for flag in sorted(claims.dual_flags):
        rep.add(f"dual {flag}", True, flag in dual.flags)
    return rep

"""Render weight distributions, dual reports, claim sets and verify reports."""

from __future__ import annotations

import csv
import io
import json

from .code import DualReport, WeightDistribution, min_distance
from .constructions import ClaimSet
from .verify import VerifyReport

FORMATS = ("table", "json", "csv")
_JSON_SAFE = 1 << 53


def json_number(x: int):
    """Integers beyond double precision are emitted as decimal strings."""
    return x if abs(x) <= _JSON_SAFE else str(x)


def _jsonable(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return json_number(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (frozenset, set)) else obj
        return [_jsonable(v) for v in items]
    return obj


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _key_values(pairs) -> str:
    width = max(len(k) for k, _ in pairs) + 2
    return "\n".join(f"{k:<{width}}{v}" for k, v in pairs) + "\n"


def _flags_text(flags) -> str:
    return ", ".join(sorted(flags)) or "-"


def _d_perp(d):
    return "ge4" if d is None else d


def weight_payload(wd: WeightDistribution, family: str, m: int) -> dict:
    return {
        "family": family, "p": wd.p, "m": m, "n": wd.n, "k": wd.k, "d": min_distance(wd),
        "weights": [{"w": w, "count": json_number(c)} for w, c in wd.counts.items()],
    }


def dual_payload(rep: DualReport) -> dict:
    return {"n": rep.n, "k_dual": rep.k_dual, "A1": json_number(rep.a1), "A2": json_number(rep.a2),
            "A3": json_number(rep.a3), "d_perp": _d_perp(rep.d_perp_lower),
            "flags": sorted(rep.flags)}


def claims_payload(cs: ClaimSet) -> dict:
    return {
        "family": cs.family, "p": cs.p, "m": cs.m, "n": cs.n, "k": cs.k, "d": cs.d,
        "k_dual": cs.k_dual, "d_dual": cs.d_dual, "dual_flags": sorted(cs.dual_flags),
        "weights": [{"w": w, "count": json_number(c)} for w, c in cs.weights.counts.items()],
    }


def verify_payload(rep: VerifyReport) -> dict:
    return {
        "family": rep.family, "p": rep.p, "m": rep.m,
        "checks": [{"name": c.name, "expected": _jsonable(c.expected),
                    "computed": _jsonable(c.computed), "status": "pass" if c.passed else "fail"}
                   for c in rep.checks],
        "overall": "pass" if rep.passed else "fail",
    }


def emit_weights(wd: WeightDistribution, fmt: str, family: str = "", m: int = 1) -> str:
    if fmt == "json":
        return dumps(weight_payload(wd, family, m)) + "\n"
    rows = list(wd.counts.items())
    if fmt == "csv":
        return _csv([("weight", "count"), *rows])
    ww = max(len("Weight"), *(len(str(w)) for w, _ in rows))
    cw = max(len("Multiplicity"), *(len(str(c)) for _, c in rows))
    lines = [f"{'Weight':>{ww}}  {'Multiplicity':>{cw}}"]
    lines += [f"{w:>{ww}}  {c:>{cw}}" for w, c in rows]
    return "\n".join(lines) + "\n"


def emit_dual(rep: DualReport, fmt: str) -> str:
    payload = dual_payload(rep)
    if fmt == "json":
        return dumps(payload) + "\n"
    pairs = [(k, payload[k]) for k in ("n", "k_dual", "A1", "A2", "A3", "d_perp")]
    if fmt == "csv":
        return _csv([("key", "value"), *pairs, ("flags", " ".join(payload["flags"]))])
    return _key_values(pairs + [("flags", _flags_text(rep.flags))])


def emit_claims(cs: ClaimSet, fmt: str) -> str:
    if fmt == "json":
        return dumps(claims_payload(cs)) + "\n"
    pairs = [("family", cs.family), ("p", cs.p), ("m", cs.m), ("n", cs.n), ("k", cs.k),
             ("d", cs.d), ("k_dual", cs.k_dual), ("d_dual", cs.d_dual)]
    if fmt == "csv":
        return _csv([("key", "value"), *pairs, ("dual_flags", " ".join(sorted(cs.dual_flags)))])
    return (_key_values(pairs + [("dual_flags", _flags_text(cs.dual_flags))])
            + "\n" + emit_weights(cs.weights, "table"))


def _short(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}:{c}" for k, c in v.items()) + "}"
    if isinstance(v, (set, frozenset)):
        return _flags_text(v)
    return str(v)


def emit_verify(rep: VerifyReport, fmt: str) -> str:
    if fmt == "json":
        return dumps(verify_payload(rep)) + "\n"
    if fmt == "csv":
        rows = [("check", "expected", "computed", "status")]
        rows += [(c.name, _short(c.expected), _short(c.computed), "pass" if c.passed else "fail")
                 for c in rep.checks]
        return _csv(rows)
    width = max(len(c.name) for c in rep.checks) + 2
    lines = [f"verify {rep.family} p={rep.p} m={rep.m}"]
    for c in rep.checks:
        status = "pass" if c.passed else "FAIL"
        lines.append(f"  {status:<5}{c.name:<{width}}expected {_short(c.expected)}"
                     + ("" if c.passed else f", computed {_short(c.computed)}"))
    lines.append(f"overall: {'pass' if rep.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def emit(report, fmt: str, **meta) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(report, WeightDistribution):
        return emit_weights(report, fmt, **meta)
    if isinstance(report, DualReport):
        return emit_dual(report, fmt)
    if isinstance(report, ClaimSet):
        return emit_claims(report, fmt)
    if isinstance(report, VerifyReport):
        return emit_verify(report, fmt)
    raise TypeError(f"cannot render {type(report).__name__}")

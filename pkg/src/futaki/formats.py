"""Strict JSON input parsing and exact JSON output.

Rationals travel as strings (``"-32/3"``) or plain integers, never floats.
Unknown fields are rejected.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .ci import CISpec
from .exactalg import CharForm, FactoredRational, MultiPoly, PrimitiveForm, as_rat
from .localize import FixedPointDatum, UnknownRestriction
from .toric import Fan, FanError


class ParseError(ValueError):
    def __init__(self, where: str, message: str):
        self.where = where
        self.message = message
        super().__init__(f"{where}: {message}" if where else message)


def _fields(obj: Any, where: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(where, f"expected an object, got {type(obj).__name__}")
    unknown = set(obj) - required - set(optional)
    if unknown:
        raise ParseError(where, f"unknown field(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(where, f"missing field(s) {sorted(missing)}")
    return obj


def _int(x: Any, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(where, f"expected an integer, got {x!r}")
    return x


def _int_list(x: Any, where: str, length: int | None = None) -> list[int]:
    if not isinstance(x, list):
        raise ParseError(where, f"expected a list of integers, got {x!r}")
    if length is not None and len(x) != length:
        raise ParseError(where, f"expected {length} entries, got {len(x)}")
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(x)]


def _rat(x: Any, where: str) -> Fraction:
    if isinstance(x, float):
        raise ParseError(where, f"floats are not allowed, write {x!r} as a string fraction")
    try:
        return as_rat(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(where, f"bad rational {x!r}: {exc}") from None


def _list(x: Any, where: str) -> list:
    if not isinstance(x, list):
        raise ParseError(where, f"expected a list, got {type(x).__name__}")
    return x


def parse_fan(data: Any) -> Fan:
    _fields(data, "fan", {"n", "rays", "cones"}, {"name"})
    n = _int(data["n"], "n")
    if n < 1:
        raise ParseError("n", "dimension must be positive")
    rays = [_int_list(r, f"rays[{i}]", n) for i, r in enumerate(_list(data["rays"], "rays"))]
    cones = [_int_list(c, f"cones[{i}]", n) for i, c in enumerate(_list(data["cones"], "cones"))]
    for i, c in enumerate(cones):
        for j in c:
            if not 0 <= j < len(rays):
                raise ParseError(f"cones[{i}]", f"ray index {j} out of range (0..{len(rays) - 1})")
    try:
        return Fan(n, rays, cones, data.get("name", ""))
    except FanError as exc:
        raise ParseError("fan", str(exc)) from None


def parse_beta(data: Any, nvars: int, where: str) -> FactoredRational:
    _fields(data, where, {"den"}, {"scale", "num"})
    scale = _rat(data.get("scale", "1"), f"{where}.scale")
    if "num" in data:
        terms = {}
        for i, t in enumerate(_list(data["num"], f"{where}.num")):
            tw = f"{where}.num[{i}]"
            if not isinstance(t, list) or len(t) != 2:
                raise ParseError(tw, "expected [exponents, coefficient]")
            exp = tuple(_int_list(t[0], tw + "[0]", nvars))
            if any(e < 0 for e in exp):
                raise ParseError(tw, "negative exponent")
            if exp in terms:
                raise ParseError(tw, f"repeated monomial {list(exp)}")
            terms[exp] = _rat(t[1], tw + "[1]")
        num = MultiPoly(nvars, terms)
    else:
        num = MultiPoly.constant(nvars, 1)
    factors: dict[PrimitiveForm, int] = {}
    for i, t in enumerate(_list(data["den"], f"{where}.den")):
        tw = f"{where}.den[{i}]"
        if not isinstance(t, list) or len(t) != 2:
            raise ParseError(tw, "expected [form, multiplicity]")
        coeffs = _int_list(t[0], tw + "[0]", nvars)
        mult = _int(t[1], tw + "[1]")
        if mult < 1:
            raise ParseError(tw, "multiplicity must be >= 1")
        if not any(coeffs):
            raise ParseError(tw, "zero linear form in denominator")
        s, prim = PrimitiveForm.from_coeffs(coeffs)
        scale /= s ** mult
        factors[prim] = factors.get(prim, 0) + mult
    return FactoredRational(num, factors, scale)


def parse_points(data: Any) -> dict:
    """Returns dict(m, n, points, unknown, degree); the last two may be None."""
    _fields(data, "", {"m", "n", "points"}, {"unknown", "degree"})
    m = _int(data["m"], "m")
    n = _int(data["n"], "n")
    if m < 1 or n < 1:
        raise ParseError("", "m and n must be positive")
    points = []
    labels = set()
    for i, p in enumerate(_list(data["points"], "points")):
        where = f"points[{i}]"
        _fields(p, where, {"label", "m"}, {"beta", "weights"})
        label = p["label"]
        if not isinstance(label, str) or not label:
            raise ParseError(where + ".label", "expected a nonempty string")
        if label in labels:
            raise ParseError(where + ".label", f"duplicate label {label!r}")
        labels.add(label)
        mform = CharForm(_rat(x, f"{where}.m[{j}]") for j, x in enumerate(_list(p["m"], where + ".m")))
        if mform.m != m:
            raise ParseError(where + ".m", f"expected {m} entries, got {mform.m}")
        if ("beta" in p) == ("weights" in p):
            raise ParseError(where, "give exactly one of 'beta' or 'weights'")
        if "beta" in p:
            points.append(FixedPointDatum(label, mform, parse_beta(p["beta"], m, where + ".beta")))
        else:
            ws = [CharForm(_int_list(w, f"{where}.weights[{j}]", m))
                  for j, w in enumerate(_list(p["weights"], where + ".weights"))]
            if len(ws) != n:
                raise ParseError(where + ".weights", f"expected {n} tangent weights, got {len(ws)}")
            if any(w.is_zero() for w in ws):
                raise ParseError(where + ".weights", "zero tangent weight: point is not isolated")
            points.append(FixedPointDatum.from_weights(label, mform, ws))
    if not points:
        raise ParseError("points", "no fixed points given")
    unknown = None
    if "unknown" in data:
        _fields(data["unknown"], "unknown", {"label"})
        label = data["unknown"]["label"]
        if not isinstance(label, str) or not label:
            raise ParseError("unknown.label", "expected a nonempty string")
        if label in labels:
            raise ParseError("unknown.label", f"{label!r} is also a known point")
        unknown = UnknownRestriction(label)
    degree = _rat(data["degree"], "degree") if "degree" in data else None
    return {"m": m, "n": n, "points": points, "unknown": unknown, "degree": degree}


def parse_ci(data: Any) -> CISpec:
    _fields(data, "", {"N", "k", "degrees", "m", "gamma", "kweights"})
    N = _int(data["N"], "N")
    k = _int(data["k"], "k")
    m = _int(data["m"], "m")
    degrees = _int_list(data["degrees"], "degrees", k)
    gamma = _list(data["gamma"], "gamma")
    kweights = _list(data["kweights"], "kweights")
    if len(gamma) != m:
        raise ParseError("gamma", f"expected {m} rows, got {len(gamma)}")
    if len(kweights) != m:
        raise ParseError("kweights", f"expected {m} rows, got {len(kweights)}")
    gamma = [_int_list(r, f"gamma[{i}]", N + 1) for i, r in enumerate(gamma)]
    kweights = [_int_list(r, f"kweights[{i}]", k) for i, r in enumerate(kweights)]
    return CISpec(N, k, degrees, m, gamma, kweights)


SCHEMAS = {"fan": parse_fan, "points": parse_points, "ci": parse_ci}


def parse_input(path: str | Path, schema: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(path), f"cannot read: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(path), f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return SCHEMAS[schema](data)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.where}" if exc.where else str(path), exc.message) from None


# -- output -----------------------------------------------------------------


def form_to_json(f: CharForm) -> list[str]:
    return [str(c) for c in f.coeffs]


def form_from_json(data: list) -> CharForm:
    return CharForm(_rat(x, f"[{i}]") for i, x in enumerate(data))


def beta_to_json(b: FactoredRational) -> dict:
    return {
        "scale": str(b.scale),
        "num": [[list(e), str(c)] for e, c in sorted(b.numerator.terms.items(), reverse=True)],
        "den": [[list(f.coeffs), mult] for f, mult in b.denom],
    }


def points_to_json(points, n: int, unknown: UnknownRestriction | None = None, degree=None) -> dict:
    out: dict = {
        "m": points[0].m.m,
        "n": n,
        "points": [
            {"label": p.label, "m": form_to_json(p.m), "beta": beta_to_json(p.beta)} for p in points
        ],
    }
    if unknown is not None:
        out["unknown"] = {"label": unknown.label}
    if degree is not None:
        out["degree"] = str(degree)
    return out


def fan_to_json(f: Fan) -> dict:
    return {"n": f.n, "rays": [list(r) for r in f.rays], "cones": [list(c) for c in f.cones]}


def dumps(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)

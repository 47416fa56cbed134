"""``futaki`` command line.

Exit codes: 0 success, 1 I/O or parse error, 2 validation failure,
3 computation error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import factorial

from . import __version__
from .ci import CIError, ci_futaki_closed, ci_futaki_direct
from .exactalg import DegreeError, PoleNotCancelled
from .formats import (
    ParseError,
    beta_to_json,
    dumps,
    form_to_json,
    parse_input,
)
from .localize import (
    InconsistentSystem,
    Underdetermined,
    futaki_from_points,
    residue_sum,
    solve_missing_point,
)
from .polytope import BARYCENTER_SIGN, NormalizationMismatch, barycenter_cross_check
from .toric import NonSmoothCone, all_cone_data, localization_sum, toric_futaki, validate_fan

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_COMPUTE = 0, 1, 2, 3
CHECKS = ("degree", "vanishing", "barycenter")
APPLICABLE = {
    "toric": {"degree", "vanishing", "barycenter"},
    "localize": {"degree", "vanishing"},
    "solve-missing": {"degree", "vanishing"},
    "ci": set(),
    "barycenter": set(),
    "validate": set(),
}


class UsageError(Exception):
    pass


class ValidationFailed(Exception):
    def __init__(self, lines):
        self.lines = lines
        super().__init__("; ".join(lines))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _checks(text: str) -> list[str]:
    out = []
    for c in (x.strip() for x in text.split(",")):
        if c not in CHECKS:
            raise argparse.ArgumentTypeError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
        if c not in out:
            out.append(c)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="futaki", description="Exact Futaki invariants by torus localization.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "toric": "Futaki form of a smooth complete fan",
        "localize": "Futaki form from fixed-point data",
        "solve-missing": "recover the restriction at one unknown fixed point, then the Futaki form",
        "ci": "Futaki form of a complete intersection in P^N",
        "barycenter": "compare a fan's Futaki form with its polytope's first moment",
        "validate": "check a fan for smoothness, completeness and the Gorenstein property",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("input", help="JSON input file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--check", type=_checks, default=[],
                       help="comma separated: degree,vanishing,barycenter")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized fan validation")
        p.add_argument("--samples", type=int, default=64, help="completeness sample directions")
        if name == "toric":
            p.add_argument("--table", action="store_true", help="also print m and beta per cone")
    return parser


def _validated_fan(args):
    fan = parse_input(args.input, "fan")
    report = validate_fan(fan, samples=args.samples, seed=args.seed)
    if not report.ok:
        raise ValidationFailed(report.failures)
    return fan, report


def _vanishing_lines(sums, n) -> tuple[list[str], dict]:
    bad = [(p, s) for p, s in enumerate(sums) if not s.is_zero()]
    if bad:
        p, s = bad[0]
        raise DegreeError(f"vanishing check failed: sum m^{p} beta = {s}")
    return [f"vanishing: sum m^p beta = 0 for p = 0..{n - 1}"], {"vanishing": True}


def cmd_toric(args):
    fan, _ = _validated_fan(args)
    F = toric_futaki(fan)
    lines = [f"F = {F}"]
    payload = {"command": "toric", "F": form_to_json(F)}
    if args.table:
        rows = []
        for cd in all_cone_data(fan):
            lines.append(f"  cone {cd.index + 1}: m = {cd.m}, beta = {cd.beta}")
            rows.append({"cone": cd.index + 1, "m": form_to_json(cd.m), "beta": beta_to_json(cd.beta)})
        payload["cones"] = rows
    checks = {}
    for c in args.check:
        if c == "degree":
            deg = localization_sum(fan, fan.n).to_constant()
            lines.append(f"degree = {deg}")
            checks["degree"] = str(deg)
        elif c == "vanishing":
            more, d = _vanishing_lines([localization_sum(fan, p) for p in range(fan.n)], fan.n)
            lines += more
            checks.update(d)
        elif c == "barycenter":
            rep = barycenter_cross_check(fan)
            lines.append(f"barycenter: F = {rep.sign}*{fan.n}!*moment, moment = {rep.moment}")
            checks["barycenter"] = {"sign": rep.sign, "moment": form_to_json(rep.moment)}
    if checks:
        payload["checks"] = checks
    return lines, payload


def _point_checks(args, points, n, lines, payload):
    checks = {}
    for c in args.check:
        if c == "degree":
            deg = residue_sum(points, n).to_constant()
            lines.append(f"degree = {deg}")
            checks["degree"] = str(deg)
        elif c == "vanishing":
            more, d = _vanishing_lines([residue_sum(points, p) for p in range(n)], n)
            lines += more
            checks.update(d)
    if checks:
        payload["checks"] = checks


def cmd_localize(args):
    data = parse_input(args.input, "points")
    if data["unknown"] is not None:
        raise UsageError(f"{args.input}: has an unknown point; use solve-missing")
    F = futaki_from_points(data["points"], data["n"])
    lines = [f"F = {F}"]
    payload = {"command": "localize", "F": form_to_json(F)}
    _point_checks(args, data["points"], data["n"], lines, payload)
    return lines, payload


def cmd_solve_missing(args):
    data = parse_input(args.input, "points")
    if data["unknown"] is None or data["degree"] is None:
        raise UsageError(f"{args.input}: solve-missing needs 'unknown' and 'degree'")
    n = data["n"]
    sol = solve_missing_point(data["points"], data["unknown"], data["degree"], n)
    lines = [f"m({sol.label}) = {sol.m}", f"F = {sol.futaki}"]
    payload = {
        "command": "solve-missing",
        "unknown": {"label": sol.label, "m": form_to_json(sol.m)},
        "F": form_to_json(sol.futaki),
    }
    if args.check:
        full = list(data["points"]) + [sol.as_point(n)]
        _point_checks(args, full, n, lines, payload)
    return lines, payload


def cmd_ci(args):
    spec = parse_input(args.input, "ci")
    direct = ci_futaki_direct(spec)
    closed = ci_futaki_closed(spec)
    if direct != closed:
        raise DegreeError(f"direct extraction {direct} disagrees with closed form {closed}")
    return [f"F = {direct}"], {"command": "ci", "F": form_to_json(direct)}


def cmd_barycenter(args):
    fan, _ = _validated_fan(args)
    rep = barycenter_cross_check(fan)
    lines = [
        f"F = {rep.futaki}",
        f"volume = {rep.volume}",
        f"moment = {rep.moment}",
        f"barycenter = {rep.barycenter}",
        f"F = {BARYCENTER_SIGN}*{fan.n}!*moment: ok",
    ]
    payload = {
        "command": "barycenter",
        "F": form_to_json(rep.futaki),
        "volume": str(rep.volume),
        "moment": form_to_json(rep.moment),
        "sign": rep.sign,
        "factor": str(Fraction(BARYCENTER_SIGN * factorial(fan.n))),
    }
    return lines, payload


def cmd_validate(args):
    fan = parse_input(args.input, "fan")
    report = validate_fan(fan, samples=args.samples, seed=args.seed)
    lines = [
        f"cones: {len(fan.cones)}, rays: {len(fan.rays)}",
        "determinants: " + " ".join(str(d) for d in report.determinants),
        f"smooth: {'yes' if report.smooth else 'no'}",
        f"complete: {'yes' if report.complete else 'no'} ({report.samples} directions)",
        f"gorenstein: {'yes' if report.gorenstein else 'no'}",
    ]
    payload = {
        "command": "validate",
        "determinants": report.determinants,
        "smooth": report.smooth,
        "complete": report.complete,
        "gorenstein": report.gorenstein,
        "failures": report.failures,
    }
    if not report.ok:
        raise ValidationFailed(report.failures)
    return lines, payload


COMMANDS = {
    "toric": cmd_toric,
    "localize": cmd_localize,
    "solve-missing": cmd_solve_missing,
    "ci": cmd_ci,
    "barycenter": cmd_barycenter,
    "validate": cmd_validate,
}


def run(args) -> int:
    bad = [c for c in args.check if c not in APPLICABLE[args.command]]
    try:
        if bad:
            raise UsageError(f"check(s) {', '.join(bad)} do not apply to '{args.command}'")
        lines, payload = COMMANDS[args.command](args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValidationFailed as exc:
        for line in exc.lines:
            print(f"invalid: {line}", file=sys.stderr)
        return EXIT_INVALID
    except CIError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (PoleNotCancelled, DegreeError, InconsistentSystem, Underdetermined,
            NormalizationMismatch, NonSmoothCone, ZeroDivisionError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.format == "json":
        print(dumps(payload))
    else:
        print("\n".join(lines))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())

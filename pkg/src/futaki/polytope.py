"""Anticanonical polytopes of toric fans and their exact first moments.

This is an independent check on the fixed-point computation: for a smooth
complete fan the Futaki form equals ``c * n! * integral_P u du`` for a sign
``c`` that does not depend on the fan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, lcm
from typing import Sequence

from .exactalg import CharForm
from .lattice import det, solve_int, solve_linear_system
from .toric import Fan, toric_futaki

# Sign relating the Futaki form to n! times the first moment of the polytope.
# Pinned on the 10-cone blow-up fan (ex21) and then required for every fan.
BARYCENTER_SIGN = 1


class UnboundedPolytope(ValueError):
    pass


class DegeneratePolytope(ValueError):
    pass


class NormalizationMismatch(ArithmeticError):
    def __init__(self, futaki: CharForm, moment_side: CharForm):
        self.futaki = futaki
        self.moment_side = moment_side
        super().__init__(f"F = {futaki} but c*n!*moment = {moment_side}")


@dataclass(frozen=True)
class HPolytope:
    """{u : <u, v> >= -1 for every normal v}."""

    n: int
    normals: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class VPolytope:
    n: int
    vertices: tuple[CharForm, ...]
    normals: tuple[tuple[int, ...], ...]

    def center(self) -> CharForm:
        return sum(self.vertices, CharForm.zero(self.n)) * Fraction(1, len(self.vertices))


def anticanonical_polytope(f: Fan) -> HPolytope:
    return HPolytope(f.n, f.rays)


def _check_bounded(p: HPolytope) -> None:
    n = p.n
    if solve_linear_system(p.normals, [0] * len(p.normals)).nullspace:
        raise UnboundedPolytope("facet normals do not span; the polytope contains a line")
    # pointed recession cone: any nonzero ray is cut out by n-1 tight normals
    for sub in combinations(p.normals, n - 1):
        null = solve_linear_system(sub, [0] * (n - 1)).nullspace if sub else [[Fraction(1)]]
        if len(null) != 1:
            continue
        d = null[0]
        for sign in (1, -1):
            if all(sign * sum(a * b for a, b in zip(d, v)) >= 0 for v in p.normals):
                raise UnboundedPolytope(f"recession direction {[str(sign * x) for x in d]}")


def enumerate_vertices(p: HPolytope) -> VPolytope:
    _check_bounded(p)
    seen = {}
    for sub in combinations(p.normals, p.n):
        if det(sub) == 0:
            continue
        u = CharForm(solve_int(sub, [-1] * p.n))
        if all(u.pair(v) >= -1 for v in p.normals):
            seen.setdefault(u.coeffs, u)
    return VPolytope(p.n, tuple(seen[k] for k in sorted(seen)), p.normals)


def _affine_dim(points: Sequence[CharForm]) -> int:
    if len(points) <= 1:
        return 0 if points else -1
    base = points[0]
    diffs = [list((q - base).coeffs) for q in points[1:]]
    return solve_linear_system(diffs, [0] * len(diffs)).rank


def _triangulate(face: frozenset, dim: int, verts: tuple[CharForm, ...], normals) -> list[list[CharForm]]:
    """Simplices (as vertex lists) covering a face, by coning its boundary
    faces from the face's vertex average."""
    pts = [verts[i] for i in sorted(face)]
    if dim == 0:
        return [[pts[0]]]
    center = sum(pts, CharForm.zero(pts[0].m)) * Fraction(1, len(pts))
    subfaces = set()
    for v in normals:
        sub = frozenset(i for i in face if verts[i].pair(v) == -1)
        if sub != face and _affine_dim([verts[i] for i in sub]) == dim - 1:
            subfaces.add(sub)
    out = []
    for sub in sorted(subfaces, key=sorted):
        for simplex in _triangulate(sub, dim - 1, verts, normals):
            out.append(simplex + [center])
    return out


def _rational_det(rows: list[list[Fraction]]) -> Fraction:
    scales = [lcm(*(x.denominator for x in r)) for r in rows]
    ints = [[int(x * s) for x in r] for r, s in zip(rows, scales)]
    total = 1
    for s in scales:
        total *= s
    return Fraction(det(ints), total)


def moment_integral(p: VPolytope, center: CharForm | None = None) -> tuple[Fraction, CharForm]:
    """Exact (volume, integral of u du) over the polytope.

    The boundary facets are triangulated recursively and coned from
    ``center`` (default: the vertex average), which must be interior.
    """
    n = p.n
    verts = p.vertices
    center = center if center is not None else p.center()
    if any(center.pair(v) <= -1 for v in p.normals):
        raise ValueError(f"coning point {center} is not interior")
    facets = set()
    for v in p.normals:
        face = frozenset(i for i, u in enumerate(verts) if u.pair(v) == -1)
        if _affine_dim([verts[i] for i in face]) == n - 1:
            facets.add(face)
    volume = Fraction(0)
    moment = CharForm.zero(n)
    nfact = factorial(n)
    for face in sorted(facets, key=sorted):
        for simplex in _triangulate(face, n - 1, verts, p.normals):
            simplex = simplex + [center]
            w0 = simplex[0]
            vol = abs(_rational_det([list((w - w0).coeffs) for w in simplex[1:]])) / nfact
            volume += vol
            moment = moment + sum(simplex, CharForm.zero(n)) * (vol / (n + 1))
    if not volume:
        raise DegeneratePolytope("polytope has zero volume")
    return volume, moment


@dataclass(frozen=True)
class CheckReport:
    futaki: CharForm
    volume: Fraction
    moment: CharForm
    sign: int

    @property
    def barycenter(self) -> CharForm:
        return self.moment * (1 / self.volume)


def barycenter_cross_check(f: Fan, sign: int = BARYCENTER_SIGN) -> CheckReport:
    futaki = toric_futaki(f)
    volume, moment = moment_integral(enumerate_vertices(anticanonical_polytope(f)))
    other = moment * (sign * factorial(f.n))
    if other != futaki:
        raise NormalizationMismatch(futaki, other)
    return CheckReport(futaki, volume, moment, sign)

"""Smooth complete fans and their localization data.

Each maximal cone is a torus fixed point.  At the fixed point of a smooth cone
with ray generators v_1..v_n and dual basis u_1..u_n:

* the anticanonical class restricts to m(sigma), the solution of
  <m, v_j> = -1 for all j;
* the tangent weights are w_i = -u_i, and beta = 1 / prod(w_i).

The sign of the weights is a convention; the negated dual basis is the one
that reproduces the printed beta tables of the blow-up examples bundled in
``futaki.data`` (see ``tests/test_toric.py``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Sequence

from .exactalg import (
    CharForm,
    DegreeError,
    FactoredRational,
    MultiPoly,
    PoleNotCancelled,
    form_pow,
    frac_add,
    frac_to_poly,
)
from .lattice import SingularCone, det, dual_basis, mat_vec, solve_int, solve_support


class FanError(ValueError):
    pass


class NonSmoothCone(ValueError):
    def __init__(self, index: int, determinant: int):
        self.index = index
        self.determinant = determinant
        super().__init__(f"cone {index} is not smooth: |det| = {abs(determinant)}")


@dataclass(frozen=True)
class Fan:
    n: int
    rays: tuple[tuple[int, ...], ...]
    cones: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "cones", tuple(tuple(int(i) for i in c) for c in self.cones))
        for k, r in enumerate(self.rays):
            if len(r) != self.n:
                raise FanError(f"ray {k} has length {len(r)}, expected {self.n}")
        for k, c in enumerate(self.cones):
            if len(c) != self.n:
                raise FanError(f"cone {k} has {len(c)} rays; only simplicial maximal cones of size {self.n} are supported")
            if len(set(c)) != len(c):
                raise FanError(f"cone {k} repeats a ray index: {list(c)}")
            for i in c:
                if not 0 <= i < len(self.rays):
                    raise FanError(f"cone {k} references ray {i}, but there are {len(self.rays)} rays")

    def cone_rays(self, i: int) -> list[tuple[int, ...]]:
        return [self.rays[j] for j in self.cones[i]]

    def transform(self, g: Sequence[Sequence[int]]) -> "Fan":
        """Apply v -> g v to every ray."""
        return Fan(self.n, [mat_vec(g, r) for r in self.rays], self.cones, self.name)

    def relabel(self, ray_perm: Sequence[int], cone_perm: Sequence[int]) -> "Fan":
        """New fan whose ray k is old ray ray_perm[k] and cone k is old cone cone_perm[k]."""
        new_index = {old: new for new, old in enumerate(ray_perm)}
        rays = [self.rays[o] for o in ray_perm]
        cones = [[new_index[j] for j in self.cones[o]] for o in cone_perm]
        return Fan(self.n, rays, cones, self.name)


@dataclass
class ValidationReport:
    determinants: list[int]
    nonsmooth: list[int]
    nonprimitive_rays: list[int]
    unused_rays: list[int]
    complete: bool
    samples: int
    gorenstein: bool
    failures: list[str] = field(default_factory=list)

    @property
    def smooth(self) -> bool:
        return not self.nonsmooth

    @property
    def ok(self) -> bool:
        return not self.failures


def _cone_contains(rays: list, direction: list[int]) -> int:
    """1 if direction is strictly inside, 0 if outside, -1 if on the boundary."""
    vt = [list(col) for col in zip(*rays)]
    lam = solve_int(vt, direction)
    if any(x < 0 for x in lam):
        return 0
    if any(x == 0 for x in lam):
        return -1
    return 1


def validate_fan(f: Fan, samples: int = 64, seed: int = 0) -> ValidationReport:
    failures = []
    dets = [det(f.cone_rays(i)) for i in range(len(f.cones))]
    nonsmooth = [i for i, d in enumerate(dets) if abs(d) != 1]
    for i in nonsmooth:
        if dets[i] == 0:
            failures.append(f"cone {i} {list(f.cones[i])} is degenerate (det = 0)")
        else:
            failures.append(f"cone {i} {list(f.cones[i])} is not smooth: |det| = {abs(dets[i])}")
    nonprim = [k for k, r in enumerate(f.rays) if reduce(gcd, r, 0) != 1]
    for k in nonprim:
        failures.append(f"ray {k} {list(f.rays[k])} is not primitive")
    used = {j for c in f.cones for j in c}
    unused = [k for k in range(len(f.rays)) if k not in used]
    for k in unused:
        failures.append(f"ray {k} {list(f.rays[k])} lies in no maximal cone")

    rng = random.Random(seed)
    usable = [i for i, d in enumerate(dets) if d]
    complete = True
    done = 0
    bound = 1 << 20
    while done < samples:
        d = [rng.randint(-bound, bound) for _ in range(f.n)]
        hits = [_cone_contains(f.cone_rays(i), d) for i in usable]
        if -1 in hits:
            continue
        done += 1
        if sum(hits) != 1:
            complete = False
            failures.append(
                f"direction {d} lies in {sum(hits)} maximal cones; fan is not complete or cones overlap"
            )
            break

    gorenstein = True
    for i in usable:
        m = solve_support(f.cone_rays(i), -1)
        if not m.is_integral():
            gorenstein = False
            failures.append(f"cone {i}: anticanonical vector {m} is not integral")
    return ValidationReport(dets, nonsmooth, nonprim, unused, complete, done, gorenstein, failures)


@dataclass(frozen=True)
class ConeData:
    index: int
    m: CharForm
    weights: tuple[CharForm, ...]
    beta: FactoredRational
    smooth: bool = True


def cone_data(f: Fan, i: int) -> ConeData:
    rays = f.cone_rays(i)
    d = det(rays)
    if abs(d) != 1:
        raise NonSmoothCone(i, d)
    weights = tuple(-u for u in dual_basis(rays))
    m = solve_support(rays, -1)
    return ConeData(i, m, weights, FactoredRational.inverse_product(weights))


def all_cone_data(f: Fan) -> list[ConeData]:
    return [cone_data(f, i) for i in range(len(f.cones))]


def _localized_sum(data: list[ConeData], p: int, n: int) -> MultiPoly:
    total = FactoredRational.zero(n)
    for cd in data:
        total = frac_add(total, cd.beta * form_pow(cd.m, p))
    try:
        return frac_to_poly(total)
    except PoleNotCancelled as exc:
        sources = {
            form: [f"cone {cd.index}" for cd in data if form in dict(cd.beta.denom)]
            for form, _ in exc.factors
        }
        raise PoleNotCancelled(exc.factors, sources) from None


def localization_sum(f: Fan, p: int) -> MultiPoly:
    """sum over maximal cones of m(sigma)^p * beta_sigma, as a polynomial."""
    return _localized_sum(all_cone_data(f), p, f.n)


def toric_futaki(f: Fan) -> CharForm:
    poly = localization_sum(f, f.n + 1)
    if poly.degree() > 1 or poly.constant_term():
        raise DegreeError(f"Futaki sum is not linear: {poly}")
    return poly.to_charform() * Fraction(1, f.n + 1)


def toric_degree(f: Fan) -> Fraction:
    poly = localization_sum(f, f.n)
    if poly.degree() > 0:
        raise DegreeError(f"degree sum is not constant: {poly}")
    return poly.to_constant()


def fixed_points(f: Fan):
    """Export the fan's fixed-point data for the generic localization engine."""
    from .localize import FixedPointDatum

    return [
        FixedPointDatum(f"sigma{cd.index + 1}", cd.m, cd.beta, weights=cd.weights)
        for cd in all_cone_data(f)
    ]


__all__ = [
    "Fan", "FanError", "NonSmoothCone", "SingularCone", "ValidationReport", "ConeData",
    "validate_fan", "cone_data", "all_cone_data", "localization_sum",
    "toric_futaki", "toric_degree", "fixed_points",
]

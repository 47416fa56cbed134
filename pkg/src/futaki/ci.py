"""Futaki invariants of complete intersections in P^N under a diagonal torus.

Two independent routes per torus coordinate i:

* ``ci_futaki_direct`` expands ((N-d+1) h - k_i e)^(N-k+1) * prod_j (d_j h + k_i^j e)
  in Q[h, e] and reads off the coefficient of h^N e, divided by N-k+1;
* ``ci_futaki_closed`` evaluates the closed form

      a_i = (N-d+1)^(N-k) * prod d_j * sum_j ((N-d+1) / ((N-k+1) d_j) - 1) k_i^j.

Plain coefficient extraction is only valid when the coordinate weights of
each row sum to zero, so that is enforced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .exactalg import CharForm, MultiPoly


class CIError(ValueError):
    pass


class WeightSumNonzero(CIError):
    pass


@dataclass(frozen=True)
class CISpec:
    N: int
    k: int
    degrees: tuple[int, ...]
    m: int
    gamma: tuple[tuple[int, ...], ...]
    kweights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        object.__setattr__(self, "gamma", tuple(tuple(int(g) for g in r) for r in self.gamma))
        object.__setattr__(self, "kweights", tuple(tuple(int(w) for w in r) for r in self.kweights))

    @property
    def d(self) -> int:
        return sum(self.degrees)

    def validate(self) -> None:
        if len(self.degrees) != self.k:
            raise CIError(f"{len(self.degrees)} degrees given for k = {self.k} equations")
        if not 0 < self.k < self.N:
            raise CIError(f"need 0 < k < N, got k = {self.k}, N = {self.N}")
        if any(d < 1 for d in self.degrees):
            raise CIError(f"degrees must be positive: {list(self.degrees)}")
        if self.d > self.N:
            raise CIError(f"total degree {self.d} exceeds N = {self.N}; not Fano")
        if len(self.gamma) != self.m or len(self.kweights) != self.m:
            raise CIError(f"gamma and kweights need {self.m} rows")
        for i, row in enumerate(self.gamma):
            if len(row) != self.N + 1:
                raise CIError(f"gamma row {i} has {len(row)} entries, expected {self.N + 1}")
            if sum(row):
                raise WeightSumNonzero(f"gamma row {i} sums to {sum(row)}, expected 0")
        for i, row in enumerate(self.kweights):
            if len(row) != self.k:
                raise CIError(f"kweights row {i} has {len(row)} entries, expected {self.k}")


def _direct_coordinate(s: CISpec, krow: tuple[int, ...]) -> Fraction:
    h = MultiPoly.var(2, 0)
    e = MultiPoly.var(2, 1)
    top = s.N - s.k + 1
    poly = ((s.N - s.d + 1) * h - sum(krow) * e) ** top
    for dj, kj in zip(s.degrees, krow):
        poly = poly * (dj * h + kj * e)
    return poly.coefficient((s.N, 1)) / top


def ci_futaki_direct(s: CISpec) -> CharForm:
    s.validate()
    return CharForm(_direct_coordinate(s, row) for row in s.kweights)


def ci_futaki_closed(s: CISpec) -> CharForm:
    s.validate()
    a = s.N - s.d + 1
    r = s.N - s.k + 1
    lead = Fraction(a ** (s.N - s.k) * prod(s.degrees))
    return CharForm(
        lead * sum(((Fraction(a, r * dj) - 1) * kj for dj, kj in zip(s.degrees, row)), Fraction(0))
        for row in s.kweights
    )

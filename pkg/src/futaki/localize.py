"""Fixed-point sums over user-supplied data, and recovery of the restriction
at one fixed point whose local contribution is unknown.

A fixed point is a pair (m, beta): m is the restriction of the equivariant
anticanonical class, beta the localized fundamental class.  For a variety of
dimension n,

    sum_j m_j^p beta_j  =  0         for p < n
                        =  (-K)^n    for p = n
    F = 1/(n+1) * sum_j m_j^(n+1) beta_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import (
    CharForm,
    DegreeError,
    FactoredRational,
    MultiPoly,
    PoleNotCancelled,
    as_rat,
    divmod_linear,
    form_pow,
    frac_add,
    frac_to_poly,
)
from .lattice import solve_linear_system


class InconsistentSystem(ArithmeticError):
    pass


class Underdetermined(ArithmeticError):
    def __init__(self, particular, nullspace):
        self.particular = particular
        self.nullspace = nullspace
        basis = "; ".join(str(CharForm(v)) for v in nullspace)
        super().__init__(
            f"restriction not determined: {CharForm(particular)} + span({basis})"
        )


@dataclass(frozen=True)
class FixedPointDatum:
    label: str
    m: CharForm
    beta: FactoredRational
    weights: tuple[CharForm, ...] | None = None

    def __post_init__(self):
        if self.beta.nvars != self.m.m:
            raise ValueError(
                f"point {self.label}: beta in {self.beta.nvars} variables, m has {self.m.m}"
            )

    @classmethod
    def from_weights(cls, label: str, m: CharForm, weights: Sequence[CharForm]) -> "FixedPointDatum":
        weights = tuple(weights)
        return cls(label, m, FactoredRational.inverse_product(weights, m.m), weights)

    def contribution(self, p: int) -> FactoredRational:
        return self.beta * form_pow(self.m, p)


@dataclass(frozen=True)
class UnknownRestriction:
    label: str


def _fold(points: Sequence[FixedPointDatum], p: int, nvars: int) -> FactoredRational:
    total = FactoredRational.zero(nvars)
    for pt in points:
        total = frac_add(total, pt.contribution(p))
    return total


def _nvars(points: Sequence[FixedPointDatum]) -> int:
    if not points:
        raise ValueError("no fixed points")
    m = points[0].m.m
    for pt in points:
        if pt.m.m != m:
            raise ValueError(f"point {pt.label} has {pt.m.m} variables, expected {m}")
    return m


def residue_sum(points: Sequence[FixedPointDatum], p: int) -> MultiPoly:
    nvars = _nvars(points)
    total = _fold(points, p, nvars)
    try:
        return frac_to_poly(total)
    except PoleNotCancelled as exc:
        sources = {
            form: [pt.label for pt in points if form in dict(pt.beta.denom)]
            for form, _ in exc.factors
        }
        raise PoleNotCancelled(exc.factors, sources) from None


def _as_futaki(poly: MultiPoly, n: int) -> CharForm:
    if poly.degree() > 1 or poly.constant_term():
        raise DegreeError(f"Futaki sum is not a linear form: {poly}")
    return poly.to_charform() * Fraction(1, n + 1)


def futaki_from_points(points: Sequence[FixedPointDatum], n: int) -> CharForm:
    return _as_futaki(residue_sum(points, n + 1), n)


@dataclass(frozen=True)
class MissingPointSolution:
    label: str
    m: CharForm
    futaki: CharForm
    equations: int
    # (degree - sum_known m^n beta); the unknown point's beta times m^n
    residual: FactoredRational

    def implied_beta(self, n: int) -> FactoredRational:
        """The only beta compatible with the degree identity: residual / m^n."""
        if self.m.is_zero():
            raise ZeroDivisionError("restriction is zero; beta is not determined by the degree")
        return self.residual * FactoredRational.inverse_product([self.m] * n, self.m.m)

    def as_point(self, n: int) -> FixedPointDatum:
        return FixedPointDatum(self.label, self.m, self.implied_beta(n))


def _pole_equations(parts: list[MultiPoly], denom) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Linear conditions on x for ``(parts[0] + sum x_i parts[i]) / denom`` to be
    a polynomial.  For each factor L^mu the restriction to L = 0 must vanish,
    then the same for the quotient, mu times."""
    rows, rhs = [], []
    for form, mult in denom:
        current = parts
        for _ in range(mult):
            split = [divmod_linear(p, form) for p in current]
            monomials = sorted({e for _, r in split for e in r.terms})
            for e in monomials:
                rows.append([r.coefficient(e) for _, r in split[1:]])
                rhs.append(-split[0][1].coefficient(e))
            current = [q for q, _ in split]
    return rows, rhs


def solve_missing_point(
    known: Sequence[FixedPointDatum],
    unknown: UnknownRestriction,
    degree,
    n: int,
) -> MissingPointSolution:
    """Recover the restriction m at the one point whose beta is unknown.

    With the degree identity the unknown beta drops out of

        E(x) = degree * m_x + sum_known m_j^n beta_j (m_j - m_x)
             = S_{n+1} + (degree - S_n) * m_x,

    and x is pinned by requiring E(x) to be a polynomial.  Returns m and
    F = E(x)/(n+1).
    """
    degree = as_rat(degree)
    nvars = _nvars(known)
    s_top = _fold(known, n + 1, nvars)
    residual = FactoredRational.constant(nvars, degree) - _fold(known, n, nvars)
    pieces = [s_top] + [residual * MultiPoly.var(nvars, i) for i in range(nvars)]

    lcm: dict = {}
    for piece in pieces:
        for form, mult in piece.denom:
            lcm[form] = max(lcm.get(form, 0), mult)
    denom = sorted(lcm.items())

    def lift(piece: FactoredRational) -> MultiPoly:
        p = piece.numerator * piece.scale
        have = dict(piece.denom)
        for form, mult in denom:
            extra = mult - have.get(form, 0)
            if extra:
                p = p * form.to_poly() ** extra
        return p

    rows, rhs = _pole_equations([lift(p) for p in pieces], denom)
    if not rows:
        rows, rhs = [[Fraction(0)] * nvars], [Fraction(0)]
    sol = solve_linear_system(rows, rhs)
    if not sol.consistent:
        raise InconsistentSystem(
            f"no restriction at {unknown.label} makes the Futaki sum a polynomial "
            f"({len(rows)} conditions, rank {sol.rank})"
        )
    if sol.nullspace:
        raise Underdetermined(sol.particular, sol.nullspace)

    m = CharForm(sol.particular)
    total = s_top
    for i, x in enumerate(sol.particular):
        if x:
            total = frac_add(total, pieces[i + 1] * x)
    futaki = _as_futaki(frac_to_poly(total), n)
    return MissingPointSolution(unknown.label, m, futaki, len(rows), residual)

"""Exact linear algebra over N = Z^n and its dual M.

Determinants and square solves use fraction-free (Bareiss) elimination, so
intermediate entries stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .exactalg import CharForm, as_rat

IntMatrix = Sequence[Sequence[int]]


class SingularCone(ValueError):
    pass


def _bareiss(rows: list[list[int]], ncols_pivot: int) -> tuple[list[list[int]], int]:
    """In-place fraction-free forward elimination on the first ``ncols_pivot``
    columns.  Returns the reduced rows and the determinant of the leading
    square block (0 if singular)."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(ncols_pivot):
        piv = next((i for i in range(k, n) if rows[i][k]), None)
        if piv is None:
            return rows, 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            f = ri[k]
            for j in range(k + 1, len(ri)):
                # exact by Sylvester's identity
                ri[j] = (pk * ri[j] - f * rows[k][j]) // prev
            ri[k] = 0
        prev = pk
    return rows, sign * rows[ncols_pivot - 1][ncols_pivot - 1] if ncols_pivot else 1


def det(m: IntMatrix) -> int:
    rows = [[int(x) for x in r] for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("det of a non-square matrix")
    if n == 0:
        return 1
    return _bareiss(rows, n)[1]


def solve_int(m: IntMatrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly for square nonsingular integer ``m``."""
    n = len(m)
    b = [as_rat(v) for v in rhs]
    scale = lcm(*(v.denominator for v in b)) if b else 1
    rows = [[int(x) for x in r] + [int(v * scale)] for r, v in zip(m, b)]
    rows, d = _bareiss(rows, n)
    if d == 0:
        raise SingularCone(f"singular matrix {[list(r) for r in m]}")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(rows[i][n]) - sum(rows[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / rows[i][i]
    return [v / scale for v in x]


def _transpose(m: IntMatrix) -> list[list[int]]:
    return [list(col) for col in zip(*m)]


def dual_basis(rays: IntMatrix) -> list[CharForm]:
    """Forms u_1..u_n with <u_i, v_j> = delta_ij for the rows v_j of ``rays``."""
    n = len(rays)
    if det(rays) == 0:
        raise SingularCone(f"rays {[list(r) for r in rays]} are linearly dependent")
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(CharForm(solve_int(rays, e)))
    return out


def solve_support(rays: IntMatrix, value=-1) -> CharForm:
    """The unique m with <m, v> = value for every row v of ``rays``."""
    if det(rays) == 0:
        raise SingularCone(f"rays {[list(r) for r in rays]} are linearly dependent")
    return CharForm(solve_int(rays, [value] * len(rays)))


def mat_vec(g: IntMatrix, v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in g]


def inverse(m: IntMatrix) -> list[list[Fraction]]:
    n = len(m)
    cols = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        cols.append(solve_int(m, e))
    return _transpose(cols)


class LinearSystemResult:
    """Outcome of ``solve_linear_system``: ``particular`` is None when the
    system is inconsistent; ``nullspace`` spans the homogeneous solutions."""

    def __init__(self, particular, nullspace, rank):
        self.particular = particular
        self.nullspace = nullspace
        self.rank = rank

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace


def solve_linear_system(a: Sequence[Sequence], b: Sequence) -> LinearSystemResult:
    """Gauss-Jordan over Q for a possibly over- or under-determined system."""
    rows = [[as_rat(x) for x in r] + [as_rat(v)] for r, v in zip(a, b)]
    ncols = len(rows[0]) - 1 if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return LinearSystemResult(None, [], r)
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    free = [c for c in range(ncols) if c not in pivots]
    null = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        null.append(v)
    return LinearSystemResult(x, null, r)

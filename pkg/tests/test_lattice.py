import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from futaki.exactalg import CharForm
from futaki.lattice import (
    SingularCone,
    det,
    dual_basis,
    inverse,
    solve_linear_system,
    solve_support,
)

from conftest import load_fan


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1) ** inversions
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


E1, E2, E3 = [1, 0, 0], [0, 1, 0], [0, 0, 1]


@pytest.mark.parametrize(
    "rows, expected",
    [([E1, E2, E3], 1), ([E1, E2, [0, 1, 1]], 1), ([E1, E2, [0, 0, 2]], 2)],
)
def test_det_examples(rows, expected):
    assert det(rows) == expected


def test_dual_basis_standard():
    assert dual_basis([E1, E2, E3]) == [CharForm(E1), CharForm(E2), CharForm(E3)]


def test_dual_basis_sigma1():
    assert dual_basis([E1, E2, [0, 1, 1]]) == [CharForm(E1), CharForm([0, 1, -1]), CharForm(E3)]


def test_dual_basis_sigma4():
    got = dual_basis([[-1, -1, -1], E2, [0, -1, -1]])
    assert got == [CharForm([-1, 0, 0]), CharForm([0, 1, -1]), CharForm([1, 0, -1])]


def test_dual_basis_singular():
    with pytest.raises(SingularCone):
        dual_basis([E1, E2, [1, 1, 0]])


@pytest.mark.parametrize(
    "rays, value, expected",
    [
        ([E1, E2, [0, 1, 1]], -1, [-1, -1, 0]),
        ([[-1, -1, -1], E2, [0, -1, -1]], -1, [0, -1, 2]),
        ([E1, E2, E3], 0, [0, 0, 0]),
    ],
)
def test_solve_support(rays, value, expected):
    assert solve_support(rays, value) == CharForm(expected)


@pytest.mark.parametrize("name", ["p3", "ex21", "ex22"])
def test_dual_pairing_all_cones(name):
    fan = load_fan(name)
    for i in range(len(fan.cones)):
        rays = fan.cone_rays(i)
        us = dual_basis(rays)
        for a, u in enumerate(us):
            assert u.is_integral()
            for b, v in enumerate(rays):
                assert u.pair(v) == (a == b)
        m = solve_support(rays, -1)
        assert all(m.pair(v) == -1 for v in rays)


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(matrices)
def test_det_matches_leibniz(m):
    assert det(m) == leibniz_det(m)


@given(matrices, st.randoms(use_true_random=False))
def test_det_row_operations(m, rng):
    n = len(m)
    if n < 2:
        return
    i, j = rng.sample(range(n), 2)
    c = rng.randint(-5, 5)
    added = [list(r) for r in m]
    added[i] = [x + c * y for x, y in zip(added[i], added[j])]
    assert det(added) == det(m)
    swapped = [list(r) for r in m]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert det(swapped) == -det(m)


def test_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        m = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)]
        if det(m) == 0:
            continue
        inv = inverse(m)
        prod = [[sum(m[i][k] * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert prod == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def test_linear_system_cases():
    unique = solve_linear_system([[1, 1], [1, -1], [2, 0]], [3, 1, 4])
    assert unique.unique and unique.particular == [2, 1]
    assert not solve_linear_system([[1, 1], [1, 1]], [1, 2]).consistent
    under = solve_linear_system([[1, 1]], [1])
    assert under.consistent and len(under.nullspace) == 1

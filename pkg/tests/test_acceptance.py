"""Exit criteria.  Arithmetic is exact, so every comparison has tolerance zero.

Run alone with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import random
from fractions import Fraction
from math import factorial

from futaki.ci import CISpec, ci_futaki_closed, ci_futaki_direct
from futaki.exactalg import CharForm
from futaki.lattice import det
from futaki.localize import residue_sum, solve_missing_point
from futaki.polytope import BARYCENTER_SIGN, anticanonical_polytope, enumerate_vertices, moment_integral
from futaki.toric import cone_data, localization_sum, toric_futaki

from conftest import load_fan, load_points, random_unimodular
from test_ci import random_spec
from test_toric import EX21_BETA, EX21_M, inverse_transpose_action, paper_beta


def test_criterion_1_ex21_reproduction():
    """Ex. 2.1: F = 4(-e1-e2+e3), all ten m(i) and beta_i as printed"""
    fan = load_fan("ex21")
    assert toric_futaki(fan) == CharForm([-4, -4, 4])
    data = [cone_data(fan, i) for i in range(10)]
    assert [cd.m for cd in data] == [CharForm(m) for m in EX21_M]
    assert [cd.beta for cd in data] == [paper_beta(*b) for b in EX21_BETA]
    assert data[6].m == data[7].m == CharForm([2, -1, 0])
    assert data[8].m == data[9].m == CharForm([-1, 2, -1])


def test_criterion_2_ex22_reproduction():
    """Ex. 2.2: 12-cone fan gives F = 4(e1+e2+e3)"""
    fan = load_fan("ex22")
    assert len(fan.cones) == 12
    assert toric_futaki(fan) == CharForm([4, 4, 4])


def test_criterion_3_ex3_reproduction():
    """Ex. 3: m(5) = -3e1+e2, F = 4(3e1-e2), re-inserted sum m^3 beta = 38"""
    ex3 = load_points("ex3")
    assert ex3["degree"] == 38 and len(ex3["points"]) == 6
    sol = solve_missing_point(ex3["points"], ex3["unknown"], ex3["degree"], 3)
    assert sol.m == CharForm([-3, 1])
    assert sol.futaki == CharForm([12, -4])
    full = list(ex3["points"]) + [sol.as_point(3)]
    assert residue_sum(full, 3) == 38


def test_criterion_4_ci_oracle_equivalence():
    """CI: closed form == direct h^N extraction on >= 100 random specs; -32/3 e1 instance"""
    rng = random.Random(4)
    specs = [random_spec(rng) for _ in range(120)]
    assert all(s.N <= 8 and s.k <= 3 for s in specs)
    for s in specs:
        assert ci_futaki_closed(s) == ci_futaki_direct(s)
    worked = CISpec(3, 1, [2], 1, [[2, 1, 0, -3]], [[2]])
    assert ci_futaki_direct(worked) == ci_futaki_closed(worked) == CharForm([Fraction(-32, 3)])


def test_criterion_5_trivial_vanishing():
    """P^3 gives 0; all-zero semi-invariance weights give 0; conic (1,0,-1) gives 0"""
    assert toric_futaki(load_fan("p3")).is_zero()
    rng = random.Random(5)
    for _ in range(25):
        s = random_spec(rng)
        zero = CISpec(s.N, s.k, s.degrees, s.m, s.gamma, [[0] * s.k for _ in range(s.m)])
        assert ci_futaki_direct(zero).is_zero() and ci_futaki_closed(zero).is_zero()
    conic = CISpec(2, 1, [2], 1, [[1, 0, -1]], [[0]])
    assert ci_futaki_direct(conic).is_zero() and ci_futaki_closed(conic).is_zero()


def test_criterion_6_localization_vanishing():
    """sum m^p beta = 0 for p < n, constant at p = n, linear at p = n+1 (all bundled fans)"""
    for name in ("p3", "ex21", "ex22"):
        fan = load_fan(name)
        for p in range(fan.n):
            assert localization_sum(fan, p).is_zero(), (name, p)
        assert localization_sum(fan, fan.n).degree() == 0
        top = localization_sum(fan, fan.n + 1)
        assert top.degree() <= 1 and top.constant_term() == 0
        assert top.homogeneous_part(1) == top


def test_criterion_7_barycenter_cross_oracle():
    """F = c * n! * integral_P u du with one pinned c (from Ex. 2.1) on Ex. 2.1, Ex. 2.2, P^3"""
    c = BARYCENTER_SIGN
    assert c in (1, -1)
    for name in ("ex21", "ex22", "p3"):
        fan = load_fan(name)
        _, moment = moment_integral(enumerate_vertices(anticanonical_polytope(fan)))
        assert toric_futaki(fan) == moment * (c * factorial(fan.n)), name


def test_criterion_8_unimodular_equivariance():
    """Ex. 2.1 rays moved by 3 random unimodular g: F moves by g^{-T}"""
    fan = load_fan("ex21")
    F = toric_futaki(fan)
    rng = random.Random(8)
    for _ in range(3):
        g = random_unimodular(3, rng)
        assert abs(det(g)) == 1
        assert toric_futaki(fan.transform(g)) == inverse_transpose_action(g, F)

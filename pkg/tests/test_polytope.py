import random
from fractions import Fraction

import pytest

from futaki.exactalg import CharForm
from futaki.lattice import mat_vec
from futaki.polytope import (
    BARYCENTER_SIGN,
    HPolytope,
    NormalizationMismatch,
    UnboundedPolytope,
    anticanonical_polytope,
    barycenter_cross_check,
    enumerate_vertices,
    moment_integral,
)

from conftest import extra_fans, load_fan, random_unimodular

CUBE = HPolytope(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)))


def test_p3_polytope(fans):
    hp = anticanonical_polytope(fans["p3"])
    assert hp.normals == ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
    verts = enumerate_vertices(hp).vertices
    assert len(verts) == 4
    assert CharForm([-1, -1, -1]) in verts and CharForm([3, -1, -1]) in verts


def test_facet_counts(fans):
    assert len(anticanonical_polytope(fans["ex21"]).normals) == 7
    assert len(anticanonical_polytope(fans["ex22"]).normals) == 8


def test_cube():
    vp = enumerate_vertices(CUBE)
    assert sorted(v.coeffs for v in vp.vertices) == sorted(
        (Fraction(a), Fraction(b), Fraction(c)) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1)
    )
    assert moment_integral(vp) == (8, CharForm.zero(3))


def test_unbounded():
    with pytest.raises(UnboundedPolytope):
        enumerate_vertices(HPolytope(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    with pytest.raises(UnboundedPolytope):
        enumerate_vertices(HPolytope(2, ((1, 0), (-1, 0))))


def test_p3_moment(fans):
    vol, mom = moment_integral(enumerate_vertices(anticanonical_polytope(fans["p3"])))
    assert vol == Fraction(32, 3) and mom.is_zero()


EX21_VERTICES = [
    [-1, -1, 0], [-1, -1, 2], [-1, 0, -1], [-1, 2, -1], [0, -1, 2], [0, 1, 0], [1, 0, -1], [2, -1, 0],
]


def test_ex21_golden(fans):
    vp = enumerate_vertices(anticanonical_polytope(fans["ex21"]))
    assert list(vp.vertices) == [CharForm(v) for v in EX21_VERTICES]
    vol, mom = moment_integral(vp)
    assert vol == Fraction(19, 3)
    assert mom == CharForm([-1, -1, 1]) * Fraction(2, 3)


@pytest.mark.parametrize("name", ["ex21", "ex22"])
def test_triangulation_invariance(fans, name):
    vp = enumerate_vertices(anticanonical_polytope(fans[name]))
    base = moment_integral(vp)
    for center in (CharForm.zero(3), vp.center() * Fraction(1, 3), CharForm([Fraction(1, 7), 0, Fraction(-1, 5)])):
        assert moment_integral(vp, center) == base


def test_unimodular_transform(fans):
    rng = random.Random(17)
    vp = enumerate_vertices(anticanonical_polytope(fans["ex21"]))
    vol, mom = moment_integral(vp)
    for _ in range(3):
        g = random_unimodular(3, rng)
        moved = HPolytope(3, tuple(tuple(mat_vec(g, r)) for r in vp.normals))
        vol2, mom2 = moment_integral(enumerate_vertices(moved))
        assert vol2 == vol
        # u -> g^{-T} u, i.e. <u, v> preserved; check by pairing with every ray
        assert sorted(mom2.pair(mat_vec(g, r)) for r in vp.normals) == sorted(mom.pair(r) for r in vp.normals)


def test_sign_pinned_on_ex21(fans):
    assert BARYCENTER_SIGN == 1
    with pytest.raises(NormalizationMismatch):
        barycenter_cross_check(fans["ex21"], sign=-1)


def smooth_reflexive_fans():
    fans = {name: load_fan(name) for name in ("p3", "ex21", "ex22")}
    fans.update(extra_fans())
    rng = random.Random(99)
    for name in list(fans):
        g = random_unimodular(3, rng)
        fans[name + "_moved"] = fans[name].transform(g)
    return fans


@pytest.mark.parametrize("name", sorted(smooth_reflexive_fans()))
def test_barycenter_cross_check(name):
    fan = smooth_reflexive_fans()[name]
    rep = barycenter_cross_check(fan)
    assert rep.sign == BARYCENTER_SIGN
    assert rep.futaki == rep.moment * 6

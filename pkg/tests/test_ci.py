import random
from fractions import Fraction

import pytest

from futaki.ci import CIError, CISpec, WeightSumNonzero, ci_futaki_closed, ci_futaki_direct
from futaki.exactalg import CharForm


def random_spec(rng: random.Random) -> CISpec:
    N = rng.randint(2, 8)
    k = rng.randint(1, min(3, N - 1))
    while True:
        degrees = [rng.randint(1, 4) for _ in range(k)]
        if sum(degrees) <= N:
            break
    m = rng.randint(1, 3)
    gamma = []
    for _ in range(m):
        row = [rng.randint(-5, 5) for _ in range(N)]
        row.append(-sum(row))
        gamma.append(row)
    kweights = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(m)]
    return CISpec(N, k, degrees, m, gamma, kweights)


def test_conic_is_zero():
    s = CISpec(2, 1, [2], 1, [[1, 0, -1]], [[0]])
    assert ci_futaki_direct(s).is_zero() and ci_futaki_closed(s).is_zero()


def test_quadric_threefold():
    # (2h - 2e)^3 (2h + 2e) has h^3 e coefficient 16 - 48 = -32
    s = CISpec(3, 1, [2], 1, [[2, 1, 0, -3]], [[2]])
    assert ci_futaki_direct(s) == CharForm([Fraction(-32, 3)])
    assert ci_futaki_closed(s) == CharForm([Fraction(-32, 3)])


def test_cubic_zero_weight():
    s = CISpec(3, 1, [3], 1, [[1, 0, 0, -1]], [[0]])
    assert ci_futaki_direct(s).is_zero()


def test_two_quadrics():
    s = CISpec(4, 2, [2, 2], 1, [[1, 1, 0, -1, -1]], [[2, 0]])
    assert ci_futaki_closed(s) == ci_futaki_direct(s) == CharForm([Fraction(-20, 3)])


def test_all_zero_weights():
    rng = random.Random(5)
    for _ in range(20):
        s = random_spec(rng)
        s = CISpec(s.N, s.k, s.degrees, s.m, s.gamma, [[0] * s.k] * s.m)
        assert ci_futaki_direct(s).is_zero() and ci_futaki_closed(s).is_zero()


def test_oracle_equivalence_randomized():
    rng = random.Random(20240601)
    for _ in range(150):
        s = random_spec(rng)
        assert ci_futaki_closed(s) == ci_futaki_direct(s), s


def test_linearity_in_kweights():
    rng = random.Random(9)
    for _ in range(30):
        s = random_spec(rng)
        t = rng.randint(-3, 3)
        scaled = CISpec(s.N, s.k, s.degrees, s.m, s.gamma, [[t * w for w in r] for r in s.kweights])
        for route in (ci_futaki_direct, ci_futaki_closed):
            assert route(scaled) == route(s) * t


def test_row_independence():
    rng = random.Random(12)
    for _ in range(30):
        s = random_spec(rng)
        F = ci_futaki_direct(s)
        for i in range(s.m):
            single = CISpec(s.N, s.k, s.degrees, 1, [s.gamma[i]], [s.kweights[i]])
            assert ci_futaki_direct(single)[0] == F[i]


def test_weight_sum_enforced():
    s = CISpec(3, 1, [2], 1, [[2, 1, 0, -2]], [[2]])
    with pytest.raises(WeightSumNonzero):
        ci_futaki_direct(s)
    with pytest.raises(WeightSumNonzero):
        ci_futaki_closed(s)


@pytest.mark.parametrize(
    "args",
    [
        (3, 3, [1, 1, 1], 1, [[0, 0, 0, 0]], [[0, 0, 0]]),  # k = N
        (3, 1, [4], 1, [[0, 0, 0, 0]], [[0]]),  # not Fano
        (3, 1, [0], 1, [[0, 0, 0, 0]], [[0]]),  # zero degree
        (3, 1, [2], 1, [[0, 0, 0]], [[0]]),  # short gamma row
    ],
)
def test_invalid_specs(args):
    with pytest.raises(CIError):
        ci_futaki_direct(CISpec(*args))

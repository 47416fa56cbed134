import random
from itertools import product

import pytest

from futaki import data_path
from futaki.formats import parse_input
from futaki.toric import Fan


def load_fan(name):
    return parse_input(data_path("fans", f"{name}.json"), "fan")


def load_points(name):
    return parse_input(data_path("fixtures", f"{name}.json"), "points")


def product_fan(a: Fan, b: Fan) -> Fan:
    n = a.n + b.n
    rays = [list(r) + [0] * b.n for r in a.rays] + [[0] * a.n + list(r) for r in b.rays]
    off = len(a.rays)
    cones = [list(ca) + [off + j for j in cb] for ca, cb in product(a.cones, b.cones)]
    return Fan(n, rays, cones)


P1 = Fan(1, [[1], [-1]], [[0], [1]])
P2 = Fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [2, 0]])


def extra_fans():
    """Smooth Fano threefolds not shipped as fixtures: P1^3 and P2 x P1."""
    return {"p1p1p1": product_fan(product_fan(P1, P1), P1), "p2p1": product_fan(P2, P1)}


def random_unimodular(n: int, rng: random.Random, steps: int = 12):
    g = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        g[i] = [x + c * y for x, y in zip(g[i], g[j])]
        if rng.random() < 0.3:
            g[i], g[j] = g[j], g[i]
    return g


@pytest.fixture(scope="session")
def fans():
    return {name: load_fan(name) for name in ("p3", "ex21", "ex22")}


@pytest.fixture(scope="session")
def ex3():
    return load_points("ex3")


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split("_")[2])):
        status = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")

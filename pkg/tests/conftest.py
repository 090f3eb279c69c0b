import random

import pytest

from multiehrhart.geometry import convex_hull_vertices, validate_polytope


def _random_polytope(rng, n, max_coord=4, max_vertices=8, lower_dim=False):
    while True:
        k = rng.randint(2, 9 if n == 3 else 7)
        pts = []
        for _ in range(k):
            p = [rng.randint(0, max_coord) for _ in range(n)]
            if lower_dim:
                # confine to the plane x3 = x1 (clipped to the box)
                p[2] = p[0]
            pts.append(tuple(p))
        verts = convex_hull_vertices(pts)
        if 2 <= len(verts) <= max_vertices:
            return validate_polytope(verts)


def make_corpus(seed=20260, size=24):
    """Seeded random integral polytopes in the nonnegative orthant.

    N <= 3, coordinates <= 4, at most 8 vertices; a few are lower
    dimensional than their ambient space.
    """
    rng = random.Random(seed)
    plan = [1] * 3 + [2] * 7 + [3] * 10 + ["3flat"] * 4
    out = []
    for kind in plan[:size]:
        if kind == "3flat":
            out.append(_random_polytope(rng, 3, lower_dim=True))
        else:
            out.append(_random_polytope(rng, kind))
    return out


CORPUS = make_corpus()


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def segment(a, b):
    return validate_polytope([(a,), (b,)])


def standard_simplex(d):
    return validate_polytope([tuple(int(i == j) for j in range(d + 1)) for i in range(d + 1)])


def corner_simplex(d):
    return validate_polytope(
        [(0,) * d] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    )


def unit_cube(d):
    from itertools import product

    return validate_polytope(list(product((0, 1), repeat=d)))


UNIT_SQUARE = validate_polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
TRIANGLE = validate_polytope([(0, 0), (1, 0), (0, 1)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        terminalreporter.write_line(results[k])

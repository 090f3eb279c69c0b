"""Acceptance suite: eleven criteria, all exact equalities.

Each test records one PASS/FAIL line (shown in the pytest terminal summary,
or printed directly when this file is run as a script).
"""
import random
import time
from functools import lru_cache

from multiehrhart import oracle
from multiehrhart.ehrhart import (
    QInteger,
    delta_vector,
    ehrhart_polynomial,
    evaluate_at_q_integers,
    reciprocity_check,
    series,
    specialize_classical,
    translate_polynomial_check,
    translate_series_check,
    vertex_cone_sum_check,
)
from multiehrhart.geometry import Cone, cone_over, shifted_vertex_cone
from multiehrhart.laurent import FactoredRationalFunction as RF
from multiehrhart.laurent import LaurentPolynomial as LP
from multiehrhart.laurent import rf_equal
from multiehrhart.transforms import (
    brion_sum,
    sigma_polytope,
    stanley_reciprocity_check,
    vertex_cone_transforms,
)

from closed_forms import (
    corner_simplex_coefficients,
    cube_coefficients,
    interval_series,
    standard_simplex_coefficients,
)
from conftest import CORPUS, UNIT_SQUARE, corner_simplex, segment, standard_simplex, unit_cube

RESULTS = {}


def record(number, title, ok, elapsed, limit=None, detail=""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    timing = f"{elapsed:.2f}s" + (f" (limit {limit}s)" if limit is not None else "")
    line = f"[{status}] criterion {number:>2}: {title} -- {timing}"
    if detail:
        line += f" -- {detail}"
    RESULTS[number] = line
    return ok and within


@lru_cache(maxsize=None)
def poly(P):
    return ehrhart_polynomial(P)


@lru_cache(maxsize=None)
def ser(P):
    return series(P)


def one(n):
    return RF.coerce(1, n)


def finite_difference(seq, order):
    for _ in range(order):
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return seq


# 1


def test_interval_formula():
    t0 = time.perf_counter()
    ok = all(
        rf_equal(series(segment(a, b)).to_rational(), interval_series(a, b))
        for a, b in [(0, 1), (0, 2), (1, 3), (2, 5)]
    )
    assert record(1, "interval series closed form", ok, time.perf_counter() - t0, 1)


# 2


def test_standard_simplex_series():
    t0 = time.perf_counter()
    ok = True
    for d in range(1, 6):
        P = standard_simplex(d)
        n = d + 2
        want = RF(LP.one(n), [v + (1,) for v in P.vertices])
        ok = ok and rf_equal(series(P).to_rational(), want)
        delta = delta_vector(P)
        ok = ok and delta[0] == LP.one(d + 1) and all(not x for x in delta.entries[1:])
        ok = ok and len(delta) == d + 1
    assert record(2, "standard simplex series and delta-vector, d = 1..5", ok,
                  time.perf_counter() - t0, 5)


# 3


def test_closed_form_polynomials():
    t0 = time.perf_counter()
    ok = True
    for d in (2, 3, 4):
        for P, expected in (
            (standard_simplex(d), standard_simplex_coefficients(d)),
            (corner_simplex(d), corner_simplex_coefficients(d)),
            (unit_cube(d), cube_coefficients(d)),
        ):
            L = ehrhart_polynomial(P)
            ok = ok and set(L.coefficients) == set(expected)
            ok = ok and all(rf_equal(L.coefficient(a), c) for a, c in expected.items())
    assert record(3, "closed-form polynomials of both simplices and the cube, d = 2,3,4", ok,
                  time.perf_counter() - t0, 10)


# 4


def test_corpus_shape():
    assert len(CORPUS) >= 20
    for P in CORPUS:
        assert P.ambient_dim <= 3 and P.num_vertices <= 8
        assert all(0 <= x <= 4 for v in P.vertices for x in v)
    assert any(P.dim < P.ambient_dim for P in CORPUS)


def test_polynomial_matches_oracle():
    t0 = time.perf_counter()
    ok = True
    for P in CORPUS:
        L = poly(P)
        fs = oracle.facet_system(P)
        for n in range(1, 5):
            brute = RF.coerce(oracle.sigma_brute(P, n, system=fs))
            ok = ok and rf_equal(evaluate_at_q_integers(L, n), brute)
    assert record(4, f"L_P([n]_q) = sigma_nP on {len(CORPUS)} polytopes, n = 1..4", ok,
                  time.perf_counter() - t0, 120)


# 5


def test_series_invariants():
    t0 = time.perf_counter()
    ok = True
    for P in CORPUS:
        S = ser(P)
        N = P.ambient_dim
        delta = S.delta()
        ok = ok and S.t_degree() <= P.num_vertices - 1
        ok = ok and delta[0] == LP.one(N)
        if len(delta) > 1:
            vsum = LP.from_points(P.vertices, N)
            ok = ok and delta[1] == sigma_polytope(P) - vsum
        parts = oracle.expand_truncated(S.to_rational(), 4).coefficients_in(N)
        for n in range(1, 5):
            ok = ok and parts.get(n, LP.zero(N)) == oracle.sigma_brute(P, n)
    assert record(5, "series degree, delta_0, delta_1 and truncated expansion", ok,
                  time.perf_counter() - t0)


# 6


def test_brion_and_vertex_cone_sum():
    t0 = time.perf_counter()
    ok = True
    for P in CORPUS:
        cts = vertex_cone_transforms(P)
        ok = ok and rf_equal(brion_sum(P, cts), RF.coerce(sigma_polytope(P)))
        ok = ok and vertex_cone_sum_check(P, cts)
    assert record(6, "Brion decomposition and vertex-cone sum equal to 1", ok,
                  time.perf_counter() - t0)


# 7


def test_stanley_reciprocity():
    t0 = time.perf_counter()
    cones = []
    for N in (1, 2, 3):
        for k in range(N):
            cones.append(Cone((0,) * N, (tuple(int(i == k) for i in range(N)),)))
    cones.append(Cone((0, 0), ((1, 0), (0, 1))))
    cones.append(cone_over(UNIT_SQUARE))
    for P in CORPUS:
        assert P.dim <= 3
        cones.extend(shifted_vertex_cone(P, i) for i in range(P.num_vertices))
    ok = all(stanley_reciprocity_check(c) for c in cones)
    assert record(7, f"Stanley reciprocity on {len(cones)} cones", ok, time.perf_counter() - t0)


# 8


def test_multibasic_reciprocity():
    t0 = time.perf_counter()
    ok = all(reciprocity_check(P, n, poly(P)) for P in CORPUS for n in (1, 2, 3))
    assert record(8, "L_P([-n]_q) = (-1)^d sigma_interior(nP)(1/q), n = 1..3", ok,
                  time.perf_counter() - t0)


# 9


def test_translation_corollaries():
    t0 = time.perf_counter()
    rng = random.Random(2023)
    ok = True
    checked = 0
    for P in CORPUS:
        N = P.ambient_dim
        for _ in range(5):
            w = (0,) * N
            while not any(w):
                w = tuple(rng.randint(-3, 3) for _ in range(N))
            ok = ok and translate_series_check(P, w)
            v = (0,) * N
            while not any(v):
                v = tuple(rng.randint(0, 2) for _ in range(N))
            ok = ok and translate_polynomial_check(P, v, poly(P))
            checked += 1
    assert record(9, f"series and polynomial translation, {checked} shifts each", ok,
                  time.perf_counter() - t0)


# 10


def test_classical_specialization():
    t0 = time.perf_counter()
    ok = True
    square = specialize_classical(ser(UNIT_SQUARE))
    exp = oracle.expand_truncated(square, 5)
    ok = ok and [exp.terms.get((n,), 0) for n in range(1, 6)] == [4, 9, 16, 25, 36]
    for P in CORPUS:
        exp = oracle.expand_truncated(specialize_classical(ser(P)), 5)
        counts = [exp.terms.get((n,), 0) for n in range(1, 6)]
        ok = ok and counts == [oracle.count_dilate(P, n) for n in range(1, 6)]
        more = [oracle.count_dilate(P, n) for n in range(1, P.dim + 4)]
        diffs = finite_difference(more, P.dim + 1)
        ok = ok and all(x == 0 for x in diffs) and any(finite_difference(more, P.dim))
    assert record(10, "q = 1 specialization gives classical counts of degree d", ok,
                  time.perf_counter() - t0)


# 11


def test_q_integer_identity():
    t0 = time.perf_counter()
    q = LP.monomial((1,))
    ok = True
    for n in range(-4, 5):
        x = QInteger(n).as_laurent()
        ok = ok and LP.one(1) + q * x - x == LP.monomial((n,))
        xr = QInteger(n).as_rational()
        ok = ok and rf_equal(one(1) + RF.coerce(q) * xr - xr, RF.coerce(LP.monomial((n,))))
        ok = ok and rf_equal(RF.coerce(x), xr)
    assert record(11, "1 + q[n]_q - [n]_q = q^n for n = -4..4", ok, time.perf_counter() - t0)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    for k in sorted(RESULTS):
        print(RESULTS[k])
    raise SystemExit(1 if failed else 0)

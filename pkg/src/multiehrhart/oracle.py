"""Brute-force ground truth.

Everything here is deliberately naive: H-descriptions come from trying
every vertex subset, lattice points come from scanning a bounding box, and
series are expanded by multiplying truncated geometric series.  None of it
shares code with the triangulation path it is used to check.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import floor

from . import _linalg as la
from .errors import ZeroHeightDenominatorFactor
from .laurent import LaurentPolynomial


@dataclass(frozen=True)
class FacetSystem:
    """``<a, x> <= b`` for each inequality and ``<a, x> == b`` for each equation."""

    inequalities: tuple
    equations: tuple

    def contains(self, x, n=1, strict=False):
        for a, b in self.equations:
            if _dot(a, x) != n * b:
                return False
        for a, b in self.inequalities:
            v = _dot(a, x)
            if v > n * b or (strict and v == n * b):
                return False
        return True


def _dot(a, x):
    return sum(p * q for p, q in zip(a, x))


def _facet_system_of_points(points):
    points = [tuple(p) for p in points]
    N = len(points[0])
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    d = la.rank(diffs) if diffs else 0
    eq_normals = la.nullspace(diffs, N) if diffs else la.nullspace([], N)
    equations = tuple((a, _dot(a, base)) for a in eq_normals)
    inequalities = set()
    if d == 0:
        return FacetSystem((), equations)
    for subset in combinations(points, d):
        s0 = subset[0]
        sd = [tuple(a - b for a, b in zip(p, s0)) for p in subset[1:]]
        if sd and la.rank(sd) != d - 1:
            continue
        ns = la.nullspace(sd + list(eq_normals), N)
        if len(ns) != 1:
            continue
        a = ns[0]
        b = _dot(a, s0)
        vals = [_dot(a, p) for p in points]
        if all(v <= b for v in vals):
            inequalities.add((a, b))
        elif all(v >= b for v in vals):
            inequalities.add((tuple(-x for x in a), -b))
    return FacetSystem(tuple(sorted(inequalities)), equations)


def facet_system(P):
    """Exact H-description of a V-polytope."""
    return _facet_system_of_points(P.vertices)


def _box(P, n):
    lo = [n * min(v[k] for v in P.vertices) for k in range(P.ambient_dim)]
    hi = [n * max(v[k] for v in P.vertices) for k in range(P.ambient_dim)]
    return lo, hi


def enumerate_dilate(P, n, interior_only=False, system=None):
    """Lattice points of nP (or of its relative interior), sorted."""
    if n < 1:
        raise ValueError("dilation factor must be positive")
    fs = system or facet_system(P)
    lo, hi = _box(P, n)
    return [
        x
        for x in product(*(range(a, b + 1) for a, b in zip(lo, hi)))
        if fs.contains(x, n, strict=interior_only)
    ]


def sigma_brute(P, n, interior_only=False, system=None):
    return LaurentPolynomial.from_points(
        enumerate_dilate(P, n, interior_only, system), P.ambient_dim
    )


def count_dilate(P, n, interior_only=False):
    return len(enumerate_dilate(P, n, interior_only))


def cone_points(cone, grading, bound, interior=False):
    """Lattice points x of an apex-0 cone with 0 <= <grading, x> <= bound."""
    gens = list(cone.generators)
    n = len(cone.apex)
    if not gens:
        return [(0,) * n]
    heights = [_dot(grading, g) for g in gens]
    if any(h <= 0 for h in heights):
        raise ZeroHeightDenominatorFactor(
            "grading must be positive on every generator", list(grading)
        )
    # x / <grading, x> is a convex combination of the g / <grading, g>
    scaled = [[Fraction(bound * g[k], h) for g, h in zip(gens, heights)] for k in range(n)]
    lo = [floor(min(0, min(col))) for col in scaled]
    hi = [floor(max(0, max(col))) for col in scaled]
    fs = _facet_system_of_points([(0,) * n] + gens)
    facets = tuple((a, b) for a, b in fs.inequalities if b == 0)
    fs = FacetSystem(facets, fs.equations)
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if _dot(grading, x) > bound:
            continue
        if fs.contains(x, 1, strict=interior):
            out.append(x)
    return out


def positive_grading(generators, max_radius=12):
    """A small integer functional positive on every generator, or None.

    Searches boxes of growing radius, smallest l1-norm first.
    """
    n = len(generators[0])
    for radius in range(1, max_radius + 1):
        cands = sorted(
            product(range(-radius, radius + 1), repeat=n),
            key=lambda a: (sum(abs(x) for x in a), a),
        )
        for a in cands:
            if all(_dot(a, g) > 0 for g in generators):
                return a
    return None


def expand_truncated(r, height_bound, grading=None):
    """Power-series expansion of a rational function, truncated by height.

    ``grading`` defaults to the last coordinate.  A factor with negative
    height is first rewritten as ``-q^-a / (1 - q^-a)``.
    """
    arity = r.arity
    grading = tuple(grading) if grading is not None else (0,) * (arity - 1) + (1,)

    def height(e):
        return _dot(grading, e)

    num = r.numerator
    factors = []
    for a, k in r.denominator.items():
        h = height(a)
        if h == 0:
            raise ZeroHeightDenominatorFactor(
                f"factor (1 - q^{list(a)}) has height 0", list(a)
            )
        if h < 0:
            neg = tuple(-x for x in a)
            num = num * (LaurentPolynomial.monomial(neg, -1) ** k)
            a, h = neg, -h
        factors.extend([(a, h)] * k)
    # every factor raises the height, so terms above the bound never return
    series = {e: c for e, c in num.items() if height(e) <= height_bound}
    for a, h in factors:
        out = {}
        for e, c in series.items():
            he = height(e)
            k = 0
            while he + k * h <= height_bound:
                key = tuple(x + k * y for x, y in zip(e, a))
                out[key] = out.get(key, 0) + c
                k += 1
        series = {e: c for e, c in out.items() if c}
    return LaurentPolynomial(series, arity)


def sigma_inclusion_exclusion(T):
    """Literal inclusion-exclusion for a two-piece triangulation.

    sigma(A) + sigma(B) - sigma(A & B), with A & B the shared face, all closed.
    """
    from .geometry import SimplicialCone
    from .transforms import sigma_simplicial

    if len(T.pieces) != 2:
        raise ValueError("literal inclusion-exclusion is implemented for two pieces")
    A, B = T.pieces
    shared = tuple(g for g in A.generators if g in B.generators)
    face = SimplicialCone(A.apex, shared)
    return sigma_simplicial(A.closed()) + sigma_simplicial(B.closed()) - sigma_simplicial(face)

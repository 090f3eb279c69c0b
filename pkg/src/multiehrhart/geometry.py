"""Polytopes, cones over them, vertex cones, and their simplicial decompositions.

Triangulations are placing triangulations that use only the given
generators.  Overlaps between pieces are removed with a half-open
decomposition: a generic reference point decides, for each piece, which
facets are dropped, so that the pieces partition the lattice points of the
source cone exactly once.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor

from . import _linalg as la
from .errors import (
    DependentGenerators,
    DimensionMismatch,
    EmptyInput,
    NotAVertex,
    NotPointed,
)


@dataclass(frozen=True)
class Polytope:
    vertices: tuple
    ambient_dim: int
    dim: int

    @property
    def num_vertices(self):
        return len(self.vertices)

    def translate(self, w):
        w = tuple(w)
        if len(w) != self.ambient_dim:
            raise DimensionMismatch("translation vector has wrong length", list(w))
        return Polytope(
            tuple(tuple(a + b for a, b in zip(v, w)) for v in self.vertices),
            self.ambient_dim,
            self.dim,
        )

    def in_nonnegative_orthant(self):
        return all(x >= 0 for v in self.vertices for x in v)


@dataclass(frozen=True)
class Cone:
    """The cone ``apex + cone(generators)``."""

    apex: tuple
    generators: tuple

    @property
    def ambient_dim(self):
        return len(self.apex)

    @property
    def dim(self):
        return la.rank(self.generators) if self.generators else 0


@dataclass(frozen=True)
class SimplicialCone:
    """``apex + {sum r_i w_i : r_i >= 0}`` with independent ``w_i``.

    ``open_facets[i]`` drops the facet opposite ``w_i``, i.e. requires r_i > 0.
    """

    apex: tuple
    generators: tuple
    open_facets: tuple = None

    def __post_init__(self):
        if self.open_facets is None:
            object.__setattr__(self, "open_facets", (False,) * len(self.generators))
        if len(self.open_facets) != len(self.generators):
            raise ValueError("one open/closed flag per generator is required")
        if self.generators and la.rank(self.generators) != len(self.generators):
            raise DependentGenerators(
                "simplicial cone generators are linearly dependent",
                [list(g) for g in self.generators],
            )

    @property
    def dim(self):
        return len(self.generators)

    def closed(self):
        return SimplicialCone(self.apex, self.generators)

    def complement(self):
        """Same cone with every facet flag flipped."""
        return SimplicialCone(
            self.apex, self.generators, tuple(not f for f in self.open_facets)
        )


@dataclass(frozen=True)
class Triangulation:
    pieces: tuple
    source: Cone
    # generator indices into source.generators, one tuple per piece
    index_sets: tuple = field(default=())


def _check_points(points):
    points = [tuple(int(x) for x in p) for p in points]
    if not points:
        raise EmptyInput("a polytope needs at least one point")
    n = len(points[0])
    if n == 0:
        raise DimensionMismatch("points must have at least one coordinate", [])
    for i, p in enumerate(points):
        if len(p) != n:
            raise DimensionMismatch(
                f"point {i} has {len(p)} coordinates, expected {n}",
                {"index": i, "point": list(p)},
            )
    return points, n


def _is_convex_combination(p, others):
    return la.in_cone(p + (1,), [o + (1,) for o in others])


def affine_dim(points):
    base = points[0]
    return la.rank([tuple(a - b for a, b in zip(p, base)) for p in points[1:]]) if len(points) > 1 else 0


def validate_polytope(points):
    """Build a :class:`Polytope` from a list of vertices, rejecting redundant points."""
    points, n = _check_points(points)
    seen = {}
    for i, p in enumerate(points):
        if p in seen:
            raise NotAVertex(i, p)
        seen[p] = i
    for i, p in enumerate(points):
        if len(points) > 1 and _is_convex_combination(p, points[:i] + points[i + 1:]):
            raise NotAVertex(i, p)
    return Polytope(tuple(points), n, affine_dim(points))


def convex_hull_vertices(points):
    """Vertices of conv(points), in first-appearance order."""
    points, _ = _check_points(points)
    pts = list(dict.fromkeys(points))
    i = 0
    while i < len(pts):
        rest = pts[:i] + pts[i + 1:]
        if rest and _is_convex_combination(pts[i], rest):
            pts.pop(i)
        else:
            i += 1
    return pts


def cone_over(P):
    """cone{(v_i, 1)}; generators are kept verbatim, not primitivized."""
    return Cone((0,) * (P.ambient_dim + 1), tuple(v + (1,) for v in P.vertices))


def _edge_directions(P, i):
    v = P.vertices[i]
    dirs = [
        tuple(a - b for a, b in zip(w, v)) for j, w in enumerate(P.vertices) if j != i
    ]
    keep = []
    for k, d in enumerate(dirs):
        if not la.in_cone(d, dirs[:k] + dirs[k + 1:]):
            keep.append(la.primitive(d))
    return tuple(keep)


def vertex_cone(P, i):
    """K_v = v + cone of primitive edge directions at vertex ``i``."""
    return Cone(P.vertices[i], _edge_directions(P, i))


def shifted_vertex_cone(P, i):
    """C_i = K_{v_i} - v_i, apex at the origin."""
    return Cone((0,) * P.ambient_dim, _edge_directions(P, i))


def is_pointed(cone):
    gens = [g for g in cone.generators if any(g)]
    if len(gens) != len(cone.generators):
        return False
    if not gens:
        return True
    # pointed iff 0 is not a convex combination of the generators
    return not la.in_cone((0,) * cone.ambient_dim + (1,), [g + (1,) for g in gens])


def _project(cone):
    cols = la.pivot_columns(cone.generators)
    return [tuple(g[c] for c in cols) for g in cone.generators]


def _sign(x):
    return (x > 0) - (x < 0)


def triangulate_pointed(cone, order=None):
    """Placing triangulation of a pointed cone using only its generators.

    Generators are inserted in ``order`` (default: input order).  Each new
    generator is joined to every boundary facet it sees strictly.
    """
    if not is_pointed(cone):
        raise NotPointed(
            "cone contains a line or a zero generator",
            [list(g) for g in cone.generators],
        )
    gens = cone.generators
    if not gens:
        return Triangulation((SimplicialCone(cone.apex, ()),), cone, ((),))
    order = list(range(len(gens))) if order is None else list(order)
    proj = _project(cone)
    r = len(proj[0])

    start = []
    for j in order:
        if la.rank([proj[k] for k in start + [j]]) == len(start) + 1:
            start.append(j)
        if len(start) == r:
            break
    simplices = [tuple(sorted(start))]
    placed = set(start)

    for j in order:
        if j in placed:
            continue
        facet_count = {}
        for s in simplices:
            for k in s:
                f = tuple(x for x in s if x != k)
                facet_count[f] = facet_count.get(f, 0) + 1
        new = []
        for s in simplices:
            for k in s:
                f = tuple(x for x in s if x != k)
                if facet_count[f] != 1:
                    continue
                rows = [proj[x] for x in f]
                inside = _sign(la.det(rows + [proj[k]]))
                here = _sign(la.det(rows + [proj[j]]))
                if here != 0 and here != inside:
                    new.append(tuple(sorted(f + (j,))))
        simplices.extend(new)
        placed.add(j)

    pieces = tuple(
        SimplicialCone(cone.apex, tuple(gens[k] for k in s)) for s in simplices
    )
    return Triangulation(pieces, cone, tuple(simplices))


def _coords_in(piece_proj, y):
    return la.solve(piece_proj, y)


def half_open_decompose(T, interior=False):
    """Assign open facets so the pieces partition the cone's lattice points.

    A facet of a piece is open when a fixed generic point ``y`` inside the
    first piece lies strictly beyond it.  With ``interior=True`` every flag
    is flipped, which partitions the relative interior instead.
    """
    pieces = T.pieces
    if len(pieces) == 1 and not interior:
        return [pieces[0].closed()]
    if not pieces[0].generators:
        # the zero cone: its relative interior is the apex itself
        return [pieces[0].closed()]
    cols = la.pivot_columns(T.source.generators)

    def proj(g):
        return tuple(g[c] for c in cols)

    first = [proj(g) for g in pieces[0].generators]
    projected = [[proj(g) for g in p.generators] for p in pieces]
    s = 2
    while True:
        y = tuple(
            sum(Fraction(s) ** i * g[c] for i, g in enumerate(first))
            for c in range(len(first[0]))
        )
        lams = [_coords_in(pp, y) for pp in projected]
        if all(all(x != 0 for x in lam) for lam in lams):
            break
        s += 1

    out = []
    for piece, lam in zip(pieces, lams):
        flags = tuple((x > 0) if interior else (x < 0) for x in lam)
        out.append(SimplicialCone(piece.apex, piece.generators, flags))
    return out


def parallelepiped_points(C):
    """Lattice points of the half-open fundamental parallelepiped of ``C``.

    Returns offsets relative to the apex: points ``sum r_i w_i`` with
    r_i in [0, 1), or r_i in (0, 1] where the facet opposite w_i is open.
    Enumerates coset representatives of the generator lattice inside the
    saturated lattice of its span, using a column Hermite normal form.
    """
    W = list(C.generators)
    n = len(C.apex)
    if not W:
        return [(0,) * n]
    basis = la.saturation_basis(W)
    A_cols = [la.solve(basis, w) for w in W]
    r = len(W)
    A = [[int(A_cols[j][i]) for j in range(r)] for i in range(r)]
    H, _, rk = la.column_hnf(A, r)
    assert rk == r
    Ainv = la.inverse(A)
    points = []
    for y in product(*(range(H[i][i]) for i in range(r))):
        lam = [sum(Ainv[i][k] * y[k] for k in range(r)) for i in range(r)]
        frac = []
        for x, is_open in zip(lam, C.open_facets):
            f = x - floor(x)
            if f == 0 and is_open:
                f = Fraction(1)
            frac.append(f)
        pt = tuple(sum(f * w[c] for f, w in zip(frac, W)) for c in range(n))
        points.append(tuple(int(x) for x in pt))
    return sorted(points)


def lattice_index(C):
    """Index of the generator lattice in the lattice points of its span."""
    return la.maximal_minors_gcd(C.generators)

"""Integer-point transforms of cones and polytopes."""
from . import geometry as geo
from .errors import DependentGenerators
from .laurent import FactoredRationalFunction, LaurentPolynomial
from .laurent import rf_equal, rf_sum


def sigma_simplicial(C):
    """Transform of a (half-open) simplicial cone with integral apex.

    Numerator: parallelepiped points shifted by the apex.  Denominator:
    one factor ``1 - q^w`` per generator.
    """
    apex = tuple(C.apex)
    if any(not isinstance(x, int) for x in apex):
        raise TypeError("only integral apexes are supported")
    if C.generators and len(C.generators) != len(set(C.generators)):
        raise DependentGenerators("repeated generator", [list(g) for g in C.generators])
    pts = geo.parallelepiped_points(C)
    n = len(apex)
    num = LaurentPolynomial.from_points(
        [tuple(a + b for a, b in zip(p, apex)) for p in pts], n
    )
    return FactoredRationalFunction(num, list(C.generators))


def sigma_pieces(cone, interior=False):
    T = geo.triangulate_pointed(cone)
    return [sigma_simplicial(c) for c in geo.half_open_decompose(T, interior)]


def sigma_pointed(cone, interior=False):
    """Transform of a pointed cone (or of its relative interior)."""
    return rf_sum(sigma_pieces(cone, interior))


def sigma_polytope(P):
    from .oracle import sigma_brute

    return sigma_brute(P, 1)


def vertex_cone_transforms(P):
    """sigma(C_i) for every vertex, C_i the vertex cone moved to the origin."""
    return [sigma_pointed(geo.shifted_vertex_cone(P, i)) for i in range(P.num_vertices)]


def brion_sum(P, cone_transforms=None):
    """Sum over vertices of q^{v_i} * sigma(C_i)."""
    cts = vertex_cone_transforms(P) if cone_transforms is None else cone_transforms
    return rf_sum(s.shift(v) for s, v in zip(cts, P.vertices))


def stanley_reciprocity_check(cone):
    """sigma_K(1/q) == (-1)^d sigma_{K interior}(q) for a cone with apex 0."""
    if any(cone.apex):
        raise ValueError("the cone must have its apex at the origin")
    d = cone.dim
    lhs = sigma_pointed(cone).invert()
    rhs = sigma_pointed(cone, interior=True)
    if d % 2:
        rhs = -rhs
    return rf_equal(lhs, rhs)

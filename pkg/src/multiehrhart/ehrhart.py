"""Multibasic Ehrhart series, delta-vectors and Ehrhart polynomials.

The series ``1 + sum_n sigma_{nP}(q) t^n`` is the integer-point transform of
the cone over ``P`` with the last variable renamed ``t``.  The polynomial
``L_P(x)`` is ``sum_i sigma(C_i) prod_k (1 + q_k x_k - x_k)^{v_ik}`` over
the vertex cones ``C_i``; substituting ``x_k = [n]_{q_k}`` gives
``sigma_{nP}(q)``.
"""
from dataclasses import dataclass, field
from itertools import product
from math import comb, prod

import numpy as np

from . import geometry as geo
from . import oracle
from ._dense import Dense
from .errors import NegativeOrthantViolation, NonGenericLinearForm
from .laurent import FactoredRationalFunction, LaurentPolynomial, rf_equal, rf_sum
from .laurent import _default_names, _format_monomial, term_order
from .transforms import sigma_pointed, vertex_cone_transforms

# ---------------------------------------------------------------- q-integers

@dataclass(frozen=True)
class QInteger:
    """``[n]_q = (1 - q^n) / (1 - q)`` in a single variable."""

    n: int

    def as_laurent(self):
        n = self.n
        if n >= 0:
            return LaurentPolynomial({(k,): 1 for k in range(n)}, 1)
        return LaurentPolynomial({(-k,): -1 for k in range(1, -n + 1)}, 1)

    def as_rational(self):
        one = LaurentPolynomial.one(1)
        return FactoredRationalFunction(one - LaurentPolynomial.monomial((self.n,)), [(1,)])

    def in_variable(self, k, arity):
        """[n]_{q_k} as a Laurent polynomial in ``arity`` variables."""
        return self.as_laurent().map_exponents(
            lambda e: tuple(e[0] if i == k else 0 for i in range(arity)), arity
        )

# -------------------------------------------------------------------- series

@dataclass(frozen=True)
class MultibasicEhrhartSeries:
    """numerator(q, t) / prod_i (1 - q^{v_i} t); the last variable is ``t``."""

    numerator: LaurentPolynomial
    vertices: tuple

    @property
    def ambient_dim(self):
        return self.numerator.arity - 1

    def factor_exponents(self):
        return [v + (1,) for v in self.vertices]

    def to_rational(self):
        return FactoredRationalFunction(self.numerator, self.factor_exponents())

    def t_degree(self):
        return self.numerator.degree_in(self.ambient_dim)

    def delta(self):
        parts = self.numerator.coefficients_in(self.ambient_dim)
        m = len(self.vertices)
        zero = LaurentPolynomial.zero(self.ambient_dim)
        return MultibasicDeltaVector(tuple(parts.get(k, zero) for k in range(m)))

    def to_json(self):
        return {
            "ambient_dim": self.ambient_dim,
            "numerator": self.numerator.to_json()["terms"],
            "denominator_vertices": [list(v) for v in self.vertices],
        }

    def pretty(self):
        names = _default_names(self.ambient_dim) + ["t"]
        den = "".join(
            f"(1 - {_format_monomial(e, names)})" for e in self.factor_exponents()
        )
        return f"({self.numerator.pretty(names)}) / ({den})"

@dataclass(frozen=True)
class MultibasicDeltaVector:
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def to_json(self):
        return [p.to_json()["terms"] for p in self.entries]

    def pretty(self):
        return "(" + ", ".join(p.pretty() for p in self.entries) + ")"

def rewrite_over(r, exponents):
    """Numerator of ``r`` over exactly ``prod (1 - q^a)`` for ``a`` in ``exponents``.

    ``r`` stores canonical (lex-positive) factors; a factor stored as
    ``1 - q^-a`` is turned back into ``1 - q^a`` at the cost of ``-q^a``
    in the numerator, and target factors ``r`` lacks multiply the numerator.
    """
    num = r.numerator
    remaining = dict(r.denominator)
    for a in exponents:
        neg = tuple(-x for x in a)
        if remaining.get(a):
            remaining[a] -= 1
        elif remaining.get(neg):
            remaining[neg] -= 1
            num = num.shift(a, -1)
        else:
            num = num.times_binomial(a)
    if any(remaining.values()):
        raise ValueError("rational function has factors outside the target denominator")
    return num

def series(P):
    """Multibasic Ehrhart series over the vertex factors ``1 - q^{v_i} t``."""
    cone = geo.cone_over(P)
    r = sigma_pointed(cone)
    S = MultibasicEhrhartSeries(rewrite_over(r, list(cone.generators)), P.vertices)
    m = P.num_vertices
    parts = S.numerator.coefficients_in(P.ambient_dim)
    assert min(parts) >= 0 and max(parts) <= m - 1, "numerator t-degree out of range"
    assert parts[0] == LaurentPolynomial.one(P.ambient_dim), "delta_0 must be 1"
    return S

def delta_vector(P, S=None):
    S = series(P) if S is None else S
    delta = S.delta()
    sigma_p = oracle.sigma_brute(P, 1)
    vertex_sum = LaurentPolynomial.from_points(P.vertices, P.ambient_dim)
    if len(delta) > 1:
        assert delta[1] == sigma_p - vertex_sum, "delta_1 must be sigma_P - sum q^v"
    return delta

def translate_series_check(P, w):
    """Ehr_{P+w}(t) == Ehr_P(q^w t) and delta_k(P+w) == delta_k(P) q^{k w}."""
    w = tuple(w)
    S = series(P)
    S2 = series(P.translate(w))
    N = P.ambient_dim
    moved = FactoredRationalFunction(
        S.numerator.substitute_monomial(N, w),
        [tuple(a + b for a, b in zip(v, w)) + (1,) for v in P.vertices],
    )
    ok = rf_equal(S2.to_rational(), moved)
    d1, d2 = S.delta(), S2.delta()
    for k in range(len(d1)):
        ok = ok and d2[k] == d1[k].shift(tuple(k * x for x in w))
    return ok

def specialize_classical(S):
    """All q_i -> 1: a rational function in t alone, denominator (1 - t)^m."""
    N = S.ambient_dim
    num = S.numerator.specialize_ones(range(N)).project([N])
    return FactoredRationalFunction(num, {(1,): len(S.vertices)})

def specialize_q_ehrhart(S, lam, check_generic=True):
    """q_i -> q^{lam_i}: a rational function in (q, t).

    By default the linear form must separate the vertices.  The substitution
    itself never produces a vanishing factor, so ``check_generic=False``
    performs it for any ``lam``.
    """
    lam = tuple(lam)
    N = S.ambient_dim
    if len(lam) != N:
        raise ValueError(f"linear form needs {N} entries")
    seen = {}
    for i, v in enumerate(S.vertices):
        val = sum(a * b for a, b in zip(lam, v))
        if check_generic and val in seen:
            raise NonGenericLinearForm(seen[val], i, val)
        seen.setdefault(val, i)

    def fn(e):
        return (sum(a * b for a, b in zip(lam, e[:N])), e[N])

    num = S.numerator.map_exponents(fn, 2)
    return FactoredRationalFunction(num, [fn(e) for e in S.factor_exponents()])

def classical_counts(S, upto):
    """Coefficients of t^0..t^upto of the q = 1 specialization."""
    expansion = oracle.expand_truncated(specialize_classical(S), upto)
    return [expansion.terms.get((k,), 0) for k in range(upto + 1)]

# ---------------------------------------------------------------- polynomial

def _binom(v, alpha):
    return prod(comb(a, b) for a, b in zip(v, alpha))

def _unit(k, n):
    return tuple(int(i == k) for i in range(n))

def _q_minus_one_power(numerator, alpha):
    """numerator * prod_k (q_k - 1)^{alpha_k}, for a Laurent or dense numerator."""
    n = len(alpha)
    out = numerator
    for k, a in enumerate(alpha):
        if a:
            out = out.times_binomial(_unit(k, n), a)
    if sum(alpha) % 2:
        out = out.negate() if isinstance(out, Dense) else -out
    return out

@dataclass
class MultibasicEhrhartPolynomial:
    """``L(x) = sum_alpha coefficient_alpha x^alpha`` with rational coefficients.

    All coefficients share the denominator ``denominator``.  The per-vertex
    data ``(sigma(C_i), v_i)`` are kept so that ``L([n]_q)`` can also be
    evaluated as ``sum_i sigma(C_i) q^{n v_i}``.
    """

    coefficients: dict
    vertices: tuple
    cone_transforms: list
    denominator: dict
    aligned: list = field(repr=False)

    @property
    def num_variables(self):
        return len(self.vertices[0])

    @property
    def total_degree(self):
        return max(sum(a) for a in self.coefficients) if self.coefficients else None

    def coefficient(self, alpha):
        alpha = tuple(alpha)
        if alpha in self.coefficients:
            return self.coefficients[alpha]
        return FactoredRationalFunction.coerce(0, self.num_variables)

    def constant_part(self):
        return self.coefficient((0,) * self.num_variables)

    def to_json(self):
        return {
            "num_variables": self.num_variables,
            "total_degree": self.total_degree,
            "coefficients": [
                [list(a), self.coefficients[a].to_json()]
                for a in sorted(self.coefficients, key=term_order)
            ],
        }

    def pretty(self):
        xs = [f"x{i + 1}" for i in range(self.num_variables)]
        parts = []
        for a in sorted(self.coefficients, key=term_order, reverse=True):
            mono = _format_monomial(a, xs)
            c = self.coefficients[a].pretty()
            parts.append(f"[{c}]*{mono}" if mono else f"[{c}]")
        return " + ".join(parts) if parts else "0"

def _check_orthant(P):
    for i, v in enumerate(P.vertices):
        if any(x < 0 for x in v):
            raise NegativeOrthantViolation(i, v)

def _dense_coefficients(P):
    """Vertex-cone data and the coefficient numerators of L_P as dense arrays."""
    _check_orthant(P)
    cts = vertex_cone_transforms(P)
    den = {}
    for s in cts:
        for a, k in s.denominator.items():
            den[a] = max(den.get(a, 0), k)
    aligned = [s.with_denominator(den) for s in cts]

    boxes = set()
    for v in P.vertices:
        boxes.update(product(*(range(x + 1) for x in v)))
    dense = [a.to_dense() for a in aligned]
    coefficients = {}
    for alpha in sorted(boxes, key=term_order):
        acc = None
        for v, num in zip(P.vertices, dense):
            b = _binom(v, alpha)
            if b:
                acc = num.add_scaled(num, b - 1) if acc is None else acc.add_scaled(num, b)
        coefficients[alpha] = _q_minus_one_power(acc, alpha)
    return cts, den, aligned, coefficients

def ehrhart_polynomial(P):
    """The multibasic Ehrhart polynomial of a polytope in the nonnegative orthant."""
    N = P.ambient_dim
    cts, den, aligned, dense = _dense_coefficients(P)
    coefficients = {}
    for alpha, d in dense.items():
        acc = LaurentPolynomial.from_dense(d, N)
        if acc:
            coefficients[alpha] = FactoredRationalFunction._raw(acc, dict(den))

    L = MultibasicEhrhartPolynomial(coefficients, P.vertices, cts, den, aligned)
    assert rf_equal(L.constant_part(), FactoredRationalFunction.coerce(1, N)), (
        "constant part must be 1"
    )
    assert L.total_degree == max(sum(v) for v in P.vertices), "degree formula"
    return L

def evaluate_at_q_integers(L, n, method="vertex"):
    """L([n]_{q_1}, ..., [n]_{q_N}) as a rational function.

    ``method="vertex"`` uses ``sum_i sigma(C_i) q^{n v_i}``;
    ``method="expanded"`` substitutes the q-integers into every monomial.
    """
    N = L.num_variables
    if method == "vertex":
        total = LaurentPolynomial.zero(N)
        for v, num in zip(L.vertices, L.aligned):
            total = total + num.shift(tuple(n * x for x in v))
        return FactoredRationalFunction._raw(total, dict(L.denominator))
    if method != "expanded":
        raise ValueError(f"unknown evaluation method {method!r}")
    # [n]_q = (1 - q^n) / (1 - q) for every integer n; clear the (1 - q_k)
    # denominators with the largest power D_k of each variable
    D = [max((a[k] for a in L.coefficients), default=0) for k in range(N)]
    total = None
    for alpha, coef in L.coefficients.items():
        if coef.denominator != L.denominator:
            raise ValueError("coefficients must share the polynomial's denominator")
        num = coef.numerator.to_dense()
        for k, a in enumerate(alpha):
            e_k = _unit(k, N)
            num = num.times_binomial(tuple(n * x for x in e_k), a)
            num = num.times_binomial(e_k, D[k] - a)
        total = num if total is None else total.add_scaled(num)
    if total is None:
        return FactoredRationalFunction.coerce(0, N)
    den = dict(L.denominator)
    for k in range(N):
        if D[k]:
            den[_unit(k, N)] = den.get(_unit(k, N), 0) + D[k]
    return FactoredRationalFunction._raw(LaurentPolynomial.from_dense(total, N), den)

def interior_series(P, bound):
    """sigma of the relative interior of nP for n = 1..bound."""
    fs = oracle.facet_system(P)
    return {
        n: oracle.sigma_brute(P, n, interior_only=True, system=fs)
        for n in range(1, bound + 1)
    }

def reciprocity_check(P, n, L=None):
    """L([-n]_q) == (-1)^d sigma_{n P interior}(1/q)."""
    if n < 1:
        raise ValueError("n must be positive")
    L = ehrhart_polynomial(P) if L is None else L
    lhs = evaluate_at_q_integers(L, -n)
    rhs = oracle.sigma_brute(P, n, interior_only=True).invert()
    if P.dim % 2:
        rhs = -rhs
    return rf_equal(lhs, FactoredRationalFunction.coerce(rhs))

def vertex_cone_sum_check(P, cone_transforms=None):
    cts = vertex_cone_transforms(P) if cone_transforms is None else cone_transforms
    return rf_equal(rf_sum(cts), FactoredRationalFunction.coerce(1, P.ambient_dim))

def _translated_dense(L, w):
    """Dense numerators of L(x) * prod_k (1 + q_k x_k - x_k)^{w_k}, over L's denominator.

    Multiplies by one linear factor at a time:
    new_g = c_g + (q_k - 1) c_{g - e_k}.
    """
    N = L.num_variables
    coeffs = {a: c.numerator.to_dense() for a, c in L.coefficients.items()}
    for k, times in enumerate(w):
        e_k = _unit(k, N)
        for _ in range(times):
            out = dict(coeffs)
            for alpha, num in coeffs.items():
                up = tuple(a + b for a, b in zip(alpha, e_k))
                # (q_k - 1) * num == -(1 - q_k) * num
                moved = num.times_binomial(e_k)
                out[up] = out[up].add_scaled(moved, -1) if up in out else moved.negate()
            coeffs = out
    return coeffs

def translation_product(L, w):
    """Coefficients of L(x) * prod_k (1 + q_k x_k - x_k)^{w_k}."""
    N = L.num_variables
    result = {}
    for g, d in _translated_dense(L, w).items():
        num = LaurentPolynomial.from_dense(d, N)
        if num:
            result[g] = FactoredRationalFunction._raw(num, dict(L.denominator))
    return result

def translate_polynomial_check(P, w, L=None):
    """Coefficientwise L_{P+w} == L_P * prod (1 + q_k x_k - x_k)^{w_k}."""
    w = tuple(w)
    if any(x < 0 for x in w):
        raise ValueError("translation must be nonnegative")
    L = ehrhart_polynomial(P) if L is None else L
    _, den2, _, lhs = _dense_coefficients(P.translate(w))
    rhs = _translated_dense(L, w)
    N = P.ambient_dim
    if den2 == dict(L.denominator):
        # same denominator: compare numerators without leaving the dense form
        empty = Dense(np.zeros((1,) * N, dtype=object), (0,) * N)
        return all(
            lhs.get(g, empty).same_as(rhs.get(g, empty)) for g in set(lhs) | set(rhs)
        )
    L2 = ehrhart_polynomial(P.translate(w))
    expected = translation_product(L, w)
    keys = set(expected) | set(L2.coefficients)
    return all(rf_equal(L2.coefficient(g), _get(expected, g, N)) for g in keys)

def _get(coeffs, g, N):
    return coeffs[g] if g in coeffs else FactoredRationalFunction.coerce(0, N)

def bilateral_cancellation_check(P, bound=2):
    """For each vertex: 1/(1 - q^-v t^-1) + q^v t/(1 - q^v t) == 0.

    The two-sided sum is only meaningful once ``L([n]_q)`` is known to be
    ``sum_i sigma(C_i) q^{n v_i}`` for every integer n, so that is checked
    too for ``|n| <= bound``, against the expanded polynomial.
    """
    N = P.ambient_dim
    ok = True
    for v in P.vertices:
        a = v + (1,)
        neg = tuple(-x for x in a)
        first = FactoredRationalFunction(LaurentPolynomial.one(N + 1), [neg])
        second = FactoredRationalFunction(LaurentPolynomial.monomial(a), [a])
        ok = ok and (first + second).is_zero()
    if ok and bound:
        L = ehrhart_polynomial(P)
        for n in range(-bound, bound + 1):
            ok = ok and rf_equal(
                evaluate_at_q_integers(L, n), evaluate_at_q_integers(L, n, "expanded")
            )
    return ok

"""Exact linear algebra over Z and Q on small dense matrices.

Vectors are tuples of ints; matrices are lists of rows unless a function
says it takes columns.  Everything is exact (``int`` / ``Fraction``).
"""
from fractions import Fraction
from itertools import combinations
from math import gcd


def _rref(rows, ncols):
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(vectors):
    vectors = list(vectors)
    if not vectors:
        return 0
    return len(_rref(vectors, len(vectors[0]))[1])


def pivot_columns(vectors):
    """Coordinates on which the projection of span(vectors) is injective."""
    vectors = list(vectors)
    return _rref(vectors, len(vectors[0]))[1]


def primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integer_scale(v):
    """Smallest primitive integer vector positively proportional to ``v``."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive(tuple(int(Fraction(x) * den) for x in v))


def nullspace(rows, n):
    """Primitive integer basis of {x in Q^n : row . x = 0 for every row}."""
    rows = [r for r in rows]
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    red, piv = _rref(rows, n)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, piv):
            x[p] = -row[f]
        basis.append(integer_scale(x))
    return basis


def solve(columns, target):
    """Coefficients c with sum c_i * columns[i] == target, or None.

    The columns must be linearly independent, so the solution is unique.
    """
    columns = list(columns)
    n = len(target)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    red, piv = _rref(aug, k + 1)
    if k in piv:
        return None
    sol = [Fraction(0)] * k
    for row, p in zip(red, piv):
        sol[p] = row[k]
    return sol


def det(matrix):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def maximal_minors_gcd(vectors):
    """gcd of the maximal minors of the matrix whose columns are ``vectors``.

    For independent integer vectors this is the index of the lattice they
    generate inside the lattice points of their span.
    """
    vectors = list(vectors)
    k = len(vectors)
    if k == 0:
        return 1
    n = len(vectors[0])
    g = 0
    for rows in combinations(range(n), k):
        g = gcd(g, det([[v[i] for v in vectors] for i in rows]))
    return abs(g)


def in_cone(x, generators):
    """Exact test whether ``x`` is a nonnegative combination of ``generators``.

    Phase one of the simplex method over the rationals: minimize the sum of
    artificial variables for ``G r = x, r >= 0``.  Bland's rule prevents
    cycling.
    """
    x = [Fraction(c) for c in x]
    if not any(x):
        return True
    gens = [g for g in generators if any(g)]
    if not gens:
        return False
    m, k = len(x), len(gens)
    width = k + m
    rows = []
    for i in range(m):
        sign = -1 if x[i] < 0 else 1
        row = [Fraction(sign * g[i]) for g in gens] + [Fraction(int(j == i)) for j in range(m)]
        rows.append(row + [sign * x[i]])
    basis = [k + i for i in range(m)]
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [-sum(r[j] for r in rows) if j < k else Fraction(0) for j in range(width)]
    cost.append(-sum(r[-1] for r in rows))
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                key = (r[-1] / r[enter], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            break  # unbounded direction; cannot happen for a bounded objective
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [v / piv for v in rows[i]]
        for t, r in enumerate(rows):
            if t != i and r[enter]:
                f = r[enter]
                rows[t] = [a - f * b for a, b in zip(r, rows[i])]
        f = cost[enter]
        cost = [a - f * b for a, b in zip(cost, rows[i])]
        basis[i] = enter
    return cost[-1] == 0


def _ext_gcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_hnf(matrix, ncols):
    """Column echelon form H = matrix * U with U unimodular.

    Returns ``(H, U, r)``; the first ``r`` columns of H are lower
    triangular with positive pivots and the remaining columns are zero, so
    columns ``r..`` of U are a Z-basis of the integer kernel.
    """
    H = [list(row) for row in matrix]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    mats = (H, U)

    def combine(p, j, s, t, u, v):
        # col_p, col_j <- s*col_p + t*col_j, u*col_p + v*col_j
        for m in mats:
            for row in m:
                a, b = row[p], row[j]
                row[p] = s * a + t * b
                row[j] = u * a + v * b

    pc = 0
    for i in range(len(H)):
        if pc >= ncols:
            break
        for j in range(pc + 1, ncols):
            b = H[i][j]
            if b == 0:
                continue
            a = H[i][pc]
            g, s, t = _ext_gcd(a, b)
            combine(pc, j, s, t, -b // g, a // g)
        if H[i][pc] != 0:
            if H[i][pc] < 0:
                for m in mats:
                    for row in m:
                        row[pc] = -row[pc]
            pc += 1
    return H, U, pc


def saturation_basis(vectors):
    """Z-basis (list of vectors) of the lattice points in span(vectors)."""
    vectors = list(vectors)
    n = len(vectors[0])
    comp = nullspace(vectors, n)
    if not comp:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    _, U, r = column_hnf(comp, n)
    return [tuple(U[i][j] for i in range(n)) for j in range(r, n)]


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    red, piv = _rref(aug, 2 * n)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]

"""Sparse Laurent polynomials over Z and rational functions with binomial denominators.

A :class:`LaurentPolynomial` is a finite map from exponent tuples to nonzero
integers.  A :class:`FactoredRationalFunction` is a Laurent numerator over a
product of factors ``(1 - q^a)``; denominators are never reduced and two
rational functions are compared by cross-multiplication.

Both types are immutable.
"""
from collections import Counter
from fractions import Fraction
from types import MappingProxyType

import numpy as np

from ._dense import Dense
from .errors import ArityMismatch, VanishingDenominatorFactor

__all__ = [
    "LaurentPolynomial",
    "FactoredRationalFunction",
    "lex_positive",
    "term_order",
    "lp_add",
    "lp_mul",
    "lp_substitute_monomial",
    "lp_invert_variables",
    "rf_add",
    "rf_mul",
    "rf_neg",
    "rf_equal",
    "rf_sum",
    "rf_specialize_ones",
]


# Exponent vectors are packed into one int, sum e_i * B^i with signed
# digits.  The packing is linear, so adding keys adds exponents.
_B = 1 << 32
_HALF = 1 << 31


def _pack(e):
    k = 0
    for x in reversed(e):
        if not -_HALF < x < _HALF:
            raise OverflowError(f"exponent {x} out of range")
        k = k * _B + x
    return k


def _unpack(k, n):
    out = []
    for _ in range(n):
        r = k % _B
        if r >= _HALF:
            r -= _B
        out.append(r)
        k = (k - r) // _B
    return tuple(out)


def lex_positive(e):
    for x in e:
        if x:
            return x > 0
    return False


def term_order(exponent):
    """Sort key for display: graded, then lexicographic."""
    return (sum(exponent), exponent)


def _format_monomial(exponent, names):
    parts = []
    for name, k in zip(names, exponent):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _default_names(arity):
    return [f"q{i + 1}" for i in range(arity)]


class LaurentPolynomial:
    __slots__ = ("_terms", "arity")

    def __init__(self, terms, arity):
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != arity:
                raise ArityMismatch(
                    f"exponent {e} does not have length {arity}", list(e)
                )
            if c:
                clean[_pack(e)] = int(c)
        self._terms = clean
        self.arity = arity

    @classmethod
    def _raw(cls, terms, arity):
        # trusted constructor: packed keys, no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p.arity = arity
        return p

    @classmethod
    def zero(cls, arity):
        return cls._raw({}, arity)

    @classmethod
    def one(cls, arity):
        return cls._raw({0: 1}, arity)

    @classmethod
    def constant(cls, c, arity):
        return cls._raw({0: c} if c else {}, arity)

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        exponent = tuple(int(x) for x in exponent)
        return cls({exponent: coefficient}, len(exponent))

    @classmethod
    def from_points(cls, points, arity):
        """The integer-point transform: sum of q^a over the given lattice points."""
        terms = Counter(tuple(p) for p in points)
        return cls(terms, arity)

    @property
    def terms(self):
        return MappingProxyType(dict(self.items()))

    def items(self):
        n = self.arity
        return [(_unpack(k, n), c) for k, c in self._terms.items()]

    def exponents(self):
        n = self.arity
        return [_unpack(k, n) for k in self._terms]

    def coefficient(self, exponent):
        return self._terms.get(_pack(tuple(exponent)), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or set(self._terms) == {0}

    def constant_term(self):
        return self._terms.get(0, 0)

    def _check(self, other):
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.arity)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if other.arity != self.arity:
            raise ArityMismatch(
                f"arity {self.arity} vs {other.arity}", [self.arity, other.arity]
            )
        return other

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def _accumulate(self, other, scale=1):
        out = dict(self._terms)
        get = out.get
        for e, c in other._terms.items():
            s = get(e, 0) + scale * c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPolynomial._raw(out, self.arity)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._accumulate(other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(
            {e: -c for e, c in self._terms.items()}, self.arity
        )

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._accumulate(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def add_scaled(self, other, scale):
        """self + scale * other, without building the scaled copy."""
        return self._accumulate(self._check(other), scale)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for f, d in b.items():
            for e, c in a.items():
                k = e + f
                s = get(k, 0) + c * d
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentPolynomial._raw(out, self.arity)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPolynomial.one(self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _key(self, exponent):
        exponent = tuple(exponent)
        if len(exponent) != self.arity:
            raise ArityMismatch("exponent has wrong length", list(exponent))
        return _pack(exponent)

    def shift(self, exponent, coefficient=1):
        """Multiply by the monomial ``coefficient * q^exponent``."""
        a = self._key(exponent)
        if coefficient == 0:
            return LaurentPolynomial.zero(self.arity)
        return LaurentPolynomial._raw(
            {e + a: c * coefficient for e, c in self._terms.items()}, self.arity
        )

    def times_binomial(self, exponent, multiplicity=1):
        """Multiply by ``(1 - q^exponent) ** multiplicity`` in O(len) per factor."""
        a = self._key(exponent)
        out = self._terms
        for _ in range(multiplicity):
            nxt = dict(out)
            get = nxt.get
            for e, c in out.items():
                k = e + a
                s = get(k, 0) - c
                if s:
                    nxt[k] = s
                else:
                    del nxt[k]
            out = nxt
        return LaurentPolynomial._raw(out, self.arity)

    def to_dense(self):
        n = self.arity
        if not self._terms:
            return Dense(np.zeros((1,) * n, dtype=object), (0,) * n)
        keys = np.fromiter(self._terms.keys(), dtype=object, count=len(self._terms))
        cols = []
        for _ in range(n):
            r = keys % _B
            r = r - _B * (r >= _HALF)
            cols.append(r.astype(np.int64))
            keys = (keys - r) // _B
        exps = np.stack(cols, axis=1)
        lo = exps.min(axis=0)
        arr = np.zeros(tuple(exps.max(axis=0) - lo + 1), dtype=object)
        arr[tuple((exps - lo).T)] = list(self._terms.values())
        return Dense(arr, tuple(int(x) for x in lo))

    @classmethod
    def from_dense(cls, dense, arity):
        nz = np.nonzero(dense.arr)
        vals = dense.arr[nz].tolist()
        keys = np.zeros(len(vals), dtype=object)
        for k in range(arity - 1, -1, -1):
            keys = keys * _B + (nz[k] + dense.lo[k]).astype(object)
        return cls._raw(dict(zip(keys.tolist(), vals)), arity)

    def map_exponents(self, fn, arity):
        """Apply a map to every exponent tuple, merging terms."""
        out = {}
        n = self.arity
        for e, c in self._terms.items():
            k = _pack(tuple(fn(_unpack(e, n))))
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPolynomial._raw(out, arity)

    def substitute_monomial(self, var_index, monomial_exponent):
        """Substitute ``t -> q^w * t`` for the variable ``t`` at ``var_index``.

        ``monomial_exponent`` has one entry per remaining variable.
        """
        if not 0 <= var_index < self.arity:
            raise IndexError(f"variable index {var_index} out of range")
        w = list(monomial_exponent)
        if len(w) != self.arity - 1:
            raise ArityMismatch("monomial exponent must omit the substituted variable", w)
        w.insert(var_index, 0)

        def fn(e):
            k = e[var_index]
            return tuple(a + k * b for a, b in zip(e, w))

        return self.map_exponents(fn, self.arity)

    def invert(self, subset=None):
        """q_i -> 1/q_i for every i in ``subset`` (all variables by default)."""
        if subset is None:
            return LaurentPolynomial._raw(
                {-e: c for e, c in self._terms.items()}, self.arity
            )
        idx = set(subset)
        return self.map_exponents(
            lambda e: tuple(-x if i in idx else x for i, x in enumerate(e)),
            self.arity,
        )

    def specialize_ones(self, subset):
        idx = set(subset)
        return self.map_exponents(
            lambda e: tuple(0 if i in idx else x for i, x in enumerate(e)),
            self.arity,
        )

    def project(self, keep):
        """Drop every variable not listed in ``keep``; exponents there must be 0."""
        keep = list(keep)
        drop = [i for i in range(self.arity) if i not in keep]
        for e in self.exponents():
            if any(e[i] for i in drop):
                raise ValueError(f"term {e} depends on a dropped variable")
        return self.map_exponents(lambda e: tuple(e[i] for i in keep), len(keep))

    def degree_in(self, var):
        if not self._terms:
            return None
        return max(e[var] for e in self.exponents())

    def min_degree_in(self, var):
        if not self._terms:
            return None
        return min(e[var] for e in self.exponents())

    def coefficients_in(self, var):
        """Split by powers of one variable: {k: polynomial in the others}."""
        groups = {}
        for e, c in self.items():
            rest = e[:var] + e[var + 1:]
            groups.setdefault(e[var], {})[rest] = c
        return {
            k: LaurentPolynomial(v, self.arity - 1) for k, v in sorted(groups.items())
        }

    def evaluate(self, point):
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def sorted_terms(self):
        return sorted(self.items(), key=lambda ec: term_order(ec[0]))

    def to_json(self):
        return {
            "arity": self.arity,
            "terms": [[list(e), str(c)] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, doc):
        return cls({tuple(e): int(c) for e, c in doc["terms"]}, doc["arity"])

    def pretty(self, names=None):
        names = names or _default_names(self.arity)
        if not self._terms:
            return "0"
        out = []
        for e, c in reversed(self.sorted_terms()):
            mono = _format_monomial(e, names)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPolynomial({self.pretty()})"


def _as_poly(x, arity):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x, arity)
    raise TypeError(f"cannot coerce {type(x).__name__}")


class FactoredRationalFunction:
    """``numerator / prod (1 - q^a)^k`` with every stored ``a`` lex-positive.

    A factor given with a lex-negative exponent is rewritten as
    ``-q^a (1 - q^-a)`` so equal factors always share one key.
    """

    __slots__ = ("numerator", "_den", "arity")

    def __init__(self, numerator, denominator=()):
        # a mapping {exponent: multiplicity} or a sequence of exponents
        if hasattr(denominator, "items"):
            denominator = list(denominator.items())
        else:
            denominator = [(tuple(d), 1) for d in denominator]
        arity = numerator.arity
        num = numerator
        den = {}
        for a, k in denominator:
            a = tuple(int(x) for x in a)
            if len(a) != arity:
                raise ArityMismatch(f"factor exponent {a} has wrong length", list(a))
            if k <= 0:
                raise ValueError("factor multiplicity must be positive")
            if not any(a):
                raise VanishingDenominatorFactor(
                    "denominator factor (1 - q^0) is zero", list(a)
                )
            if not lex_positive(a):
                neg = tuple(-x for x in a)
                num = num * (LaurentPolynomial.monomial(neg, -1) ** k)
                a = neg
            den[a] = den.get(a, 0) + k
        self.numerator = num
        self._den = den
        self.arity = arity

    @classmethod
    def _raw(cls, numerator, den):
        r = object.__new__(cls)
        r.numerator = numerator
        r._den = den
        r.arity = numerator.arity
        return r

    @classmethod
    def coerce(cls, x, arity=None):
        if isinstance(x, FactoredRationalFunction):
            return x
        if isinstance(x, LaurentPolynomial):
            return cls._raw(x, {})
        if isinstance(x, int) and arity is not None:
            return cls._raw(_as_poly(x, arity), {})
        raise TypeError(f"cannot coerce {type(x).__name__} to a rational function")

    @classmethod
    def geometric(cls, exponent):
        """1 / (1 - q^exponent)."""
        return cls(LaurentPolynomial.one(len(exponent)), [tuple(exponent)])

    @property
    def denominator(self):
        return MappingProxyType(self._den)

    def denominator_factors(self):
        return sorted(self._den.items(), key=lambda ak: term_order(ak[0]))

    def denominator_product(self):
        return _expand_den(LaurentPolynomial.one(self.arity), self._den)

    def is_zero(self):
        return not self.numerator

    def _other(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            other = FactoredRationalFunction.coerce(other, self.arity)
        if not isinstance(other, FactoredRationalFunction):
            return NotImplemented
        if other.arity != self.arity:
            raise ArityMismatch(
                f"arity {self.arity} vs {other.arity}", [self.arity, other.arity]
            )
        return other

    def with_denominator(self, den):
        """Same value over a larger denominator ``den`` (must contain ours)."""
        extra = {}
        for a, k in den.items():
            have = self._den.get(a, 0)
            if have > k:
                raise ValueError("target denominator does not contain this one")
            if k > have:
                extra[a] = k - have
        for a in self._den:
            if a not in den:
                raise ValueError("target denominator does not contain this one")
        return _expand_den(self.numerator, extra)

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return rf_sum([self, other])

    __radd__ = __add__

    def __neg__(self):
        return FactoredRationalFunction._raw(-self.numerator, dict(self._den))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        den = dict(self._den)
        for a, k in other._den.items():
            den[a] = den.get(a, 0) + k
        return FactoredRationalFunction._raw(self.numerator * other.numerator, den)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return rf_equal(self, other)

    __hash__ = None

    def map_exponents(self, fn, arity):
        """Apply an exponent map to numerator and factors.

        Raises VanishingDenominatorFactor when a factor maps to ``1 - q^0``.
        """
        num = self.numerator.map_exponents(fn, arity)
        den = {}
        for a, k in self._den.items():
            b = tuple(fn(a))
            if not any(b):
                raise VanishingDenominatorFactor(
                    f"factor (1 - q^{list(a)}) vanishes under the substitution",
                    list(a),
                )
            den[b] = den.get(b, 0) + k
        return FactoredRationalFunction(num, den)

    def invert(self, subset=None):
        idx = set(range(self.arity)) if subset is None else set(subset)
        return self.map_exponents(
            lambda e: tuple(-x if i in idx else x for i, x in enumerate(e)),
            self.arity,
        )

    def specialize_ones(self, subset):
        idx = set(subset)
        return self.map_exponents(
            lambda e: tuple(0 if i in idx else x for i, x in enumerate(e)),
            self.arity,
        )

    def shift(self, exponent, coefficient=1):
        return FactoredRationalFunction._raw(
            self.numerator.shift(exponent, coefficient), dict(self._den)
        )

    def evaluate(self, point):
        """Value at a rational point (Fractions); ZeroDivisionError at a pole."""
        den = Fraction(1)
        one = Fraction(1)
        for a, k in self._den.items():
            den *= (one - LaurentPolynomial.monomial(a).evaluate(point)) ** k
        return self.numerator.evaluate(point) / den

    def to_json(self):
        doc = self.numerator.to_json()
        return {
            "arity": self.arity,
            "numerator": doc["terms"],
            "denominator": [[list(a), k] for a, k in self.denominator_factors()],
        }

    @classmethod
    def from_json(cls, doc):
        num = LaurentPolynomial(
            {tuple(e): int(c) for e, c in doc["numerator"]}, doc["arity"]
        )
        return cls(num, {tuple(a): k for a, k in doc["denominator"]})

    def pretty(self, names=None):
        names = names or _default_names(self.arity)
        num = self.numerator.pretty(names)
        if not self._den:
            return num
        parts = []
        for a, k in self.denominator_factors():
            f = f"(1 - {_format_monomial(a, names)})"
            parts.append(f if k == 1 else f"{f}^{k}")
        return f"({num}) / ({''.join(parts)})"

    def __repr__(self):
        return f"FactoredRationalFunction({self.pretty()})"


_DENSE_WORK = 20000


def _expand_den(poly, den):
    """poly * prod (1 - q^a)^k."""
    total = sum(den.values())
    if total > 1 and len(poly) * total > _DENSE_WORK:
        d = poly.to_dense()
        for a, k in sorted(den.items()):
            d = d.times_binomial(a, k)
        return LaurentPolynomial.from_dense(d, poly.arity)
    for a, k in sorted(den.items()):
        poly = poly.times_binomial(a, k)
    return poly


def rf_sum(functions):
    """Sum over the per-exponent maximal common denominator."""
    functions = list(functions)
    if not functions:
        raise ValueError("rf_sum needs at least one term")
    arity = functions[0].arity
    den = {}
    for f in functions:
        if f.arity != arity:
            raise ArityMismatch(f"arity {arity} vs {f.arity}", [arity, f.arity])
        for a, k in f._den.items():
            if k > den.get(a, 0):
                den[a] = k
    total = LaurentPolynomial.zero(arity)
    for f in functions:
        total = total + f.with_denominator(den)
    return FactoredRationalFunction._raw(total, den)


def rf_equal(a, b):
    """Decide a == b by cross-multiplying, after cancelling shared factors."""
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}", [a.arity, b.arity])
    da, db = dict(a._den), dict(b._den)
    for e in list(da):
        if e in db:
            c = min(da[e], db[e])
            da[e] -= c
            db[e] -= c
    da = {e: k for e, k in da.items() if k}
    db = {e: k for e, k in db.items() if k}
    return _expand_den(a.numerator, db) == _expand_den(b.numerator, da)


# Function-style names for the ring operations.


def lp_add(a, b):
    return a + b


def lp_mul(a, b):
    return a * b


def lp_substitute_monomial(p, var_index, monomial_exponent):
    return p.substitute_monomial(var_index, monomial_exponent)


def lp_invert_variables(p, subset=None):
    return p.invert(subset)


def rf_add(a, b):
    return a + b


def rf_mul(a, b):
    return a * b


def rf_neg(a):
    return -a


def rf_specialize_ones(r, subset):
    return r.specialize_ones(subset)

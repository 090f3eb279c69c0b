"""Command-line front end.

    multiehrhart COMMAND POLYTOPE.json [--n N] [--lambda a,b,...] [--bound B]
                 [--format json|pretty] [--interior]

The input file holds ``{"vertices": [[int, ...], ...]}``.  Errors are
written to stdout as ``{"error": {"code", "message", "datum"}}`` with exit
status 2.
"""
import argparse
import json
import sys

from . import ehrhart as eh
from . import geometry as geo
from . import oracle
from . import transforms as tr
from .errors import EhrhartError
from .laurent import FactoredRationalFunction, LaurentPolynomial, rf_equal

COMMANDS = ("series", "delta", "poly", "eval", "reciprocity", "specialize", "verify")


class InvalidInput(EhrhartError):
    code = "invalid_input"


class InvalidParameter(EhrhartError):
    code = "invalid_parameter"


def _parser():
    p = argparse.ArgumentParser(
        prog="multiehrhart",
        description="Multibasic Ehrhart series, delta-vectors and polynomials of lattice polytopes.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help='JSON file {"vertices": [[int, ...], ...]}')
    p.add_argument("--n", type=int, help="dilation factor for eval / reciprocity")
    p.add_argument("--lambda", dest="lam", help="comma-separated integers for specialize")
    p.add_argument("--bound", type=int, default=3, help="largest dilation checked by verify")
    p.add_argument("--format", choices=("json", "pretty"), default="json")
    p.add_argument(
        "--interior", action="store_true", help="eval: also report sigma of the interior of nP"
    )
    return p


def _check_params(args):
    cmd = args.command
    if cmd in ("eval", "reciprocity") and args.n is None:
        raise InvalidParameter(f"{cmd} requires --n", None)
    if cmd == "reciprocity" and args.n < 1:
        raise InvalidParameter("reciprocity requires --n >= 1", args.n)
    if args.interior and (cmd != "eval" or args.n is None or args.n < 1):
        raise InvalidParameter("--interior applies to eval with --n >= 1", args.n)
    if args.bound < 1:
        raise InvalidParameter("--bound must be positive", args.bound)
    lam = None
    if args.lam is not None:
        if cmd != "specialize":
            raise InvalidParameter("--lambda applies to specialize only", args.lam)
        try:
            lam = tuple(int(x) for x in args.lam.split(","))
        except ValueError:
            raise InvalidParameter("--lambda must be comma-separated integers", args.lam)
    return lam


def load_polytope(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}", path)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc.msg}", path)
    verts = doc.get("vertices") if isinstance(doc, dict) else None
    if not isinstance(verts, list) or not all(
        isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v)
        for v in verts
    ):
        raise InvalidInput('expected {"vertices": [[int, ...], ...]}', doc)
    return geo.validate_polytope(verts)


# ------------------------------------------------------------ commands


def cmd_series(P, args):
    S = eh.series(P)
    return S.to_json(), S.pretty()


def cmd_delta(P, args):
    d = eh.delta_vector(P)
    return {"delta": d.to_json()}, d.pretty()


def cmd_poly(P, args):
    L = eh.ehrhart_polynomial(P)
    return L.to_json(), L.pretty()


def cmd_eval(P, args):
    n = args.n
    L = eh.ehrhart_polynomial(P)
    value = eh.evaluate_at_q_integers(L, n)
    doc = {"n": n, "value": value.to_json(), "oracle_agrees": None}
    lines = [f"L([{n}]_q) = {value.pretty()}"]
    if n >= 1:
        agrees = rf_equal(value, FactoredRationalFunction.coerce(oracle.sigma_brute(P, n)))
        doc["oracle_agrees"] = agrees
        lines.append(f"agrees with lattice-point enumeration: {str(agrees).lower()}")
    if args.interior:
        inner = eh.interior_series(P, n)[n]
        doc["interior_transform"] = inner.to_json()["terms"]
        lines.append(f"sigma of the interior of {n}P = {inner.pretty()}")
    return doc, "\n".join(lines)


def cmd_reciprocity(P, args):
    n = args.n
    L = eh.ehrhart_polynomial(P)
    lhs = eh.evaluate_at_q_integers(L, -n)
    rhs = oracle.sigma_brute(P, n, interior_only=True).invert()
    if P.dim % 2:
        rhs = -rhs
    rhs = FactoredRationalFunction.coerce(rhs)
    holds = rf_equal(lhs, rhs)
    doc = {"n": n, "holds": holds, "lhs": lhs.to_json(), "rhs": rhs.to_json()}
    text = (
        f"L([-{n}]_q) = {lhs.pretty()}\n"
        f"(-1)^{P.dim} sigma_interior({n}P)(1/q) = {rhs.pretty()}\n"
        f"holds: {str(holds).lower()}"
    )
    return doc, text, (0 if holds else 1)


def cmd_specialize(P, args, lam):
    S = eh.series(P)
    if lam is None:
        r = eh.specialize_classical(S)
        counts = eh.classical_counts(S, P.num_vertices + 1)
        doc = {"kind": "classical", "value": r.to_json(), "counts": counts}
        text = f"Ehr(t) = {r.pretty(['t'])}\ncounts: {', '.join(map(str, counts))}"
        return doc, text
    if len(lam) != P.ambient_dim:
        raise InvalidParameter(
            f"--lambda needs {P.ambient_dim} entries, got {len(lam)}", list(lam)
        )
    r = eh.specialize_q_ehrhart(S, lam)
    doc = {"kind": "q-ehrhart", "lambda": list(lam), "value": r.to_json()}
    return doc, f"Ehr(t, q) = {r.pretty(['q', 't'])}"


# ------------------------------------------------------------ verify


def _translations(P):
    N = P.ambient_dim
    shifts = [(1,) * N] + [tuple(int(i == k) for i in range(N)) for k in range(N)]
    return list(dict.fromkeys(shifts))


def verification_checks(P, bound):
    """(name, statement, thunk) triples; a thunk returns True, False or None (skipped)."""
    orthant = P.in_nonnegative_orthant()
    state = {}

    def S():
        if "S" not in state:
            state["S"] = eh.series(P)
        return state["S"]

    def L():
        if "L" not in state:
            state["L"] = eh.ehrhart_polynomial(P)
        return state["L"]

    def cts():
        if "cts" not in state:
            state["cts"] = tr.vertex_cone_transforms(P)
        return state["cts"]

    def brion():
        return rf_equal(
            tr.brion_sum(P, cts()), FactoredRationalFunction.coerce(tr.sigma_polytope(P))
        )

    def truncation():
        expansion = oracle.expand_truncated(S().to_rational(), bound)
        parts = expansion.coefficients_in(P.ambient_dim)
        for n in range(bound + 1):
            want = (
                LaurentPolynomial.one(P.ambient_dim) if n == 0 else oracle.sigma_brute(P, n)
            )
            if parts.get(n, LaurentPolynomial.zero(P.ambient_dim)) != want:
                return False
        return True

    def delta_props():
        s = S()
        d = s.delta()
        if s.t_degree() > P.num_vertices - 1 or d[0] != LaurentPolynomial.one(P.ambient_dim):
            return False
        if len(d) > 1:
            vsum = LaurentPolynomial.from_points(P.vertices, P.ambient_dim)
            return d[1] == tr.sigma_polytope(P) - vsum
        return True

    def stanley_cone_over():
        return tr.stanley_reciprocity_check(geo.cone_over(P))

    def stanley_vertex_cones():
        return all(
            tr.stanley_reciprocity_check(geo.shifted_vertex_cone(P, i))
            for i in range(P.num_vertices)
        )

    def series_translation():
        return all(eh.translate_series_check(P, w) for w in _translations(P))

    def classical():
        counts = eh.classical_counts(S(), bound)
        return counts == [1] + [oracle.count_dilate(P, n) for n in range(1, bound + 1)]

    def needs_orthant(fn):
        return fn if orthant else (lambda: None)

    def poly_oracle():
        for n in range(0, bound + 1):
            want = (
                LaurentPolynomial.one(P.ambient_dim) if n == 0 else oracle.sigma_brute(P, n)
            )
            got = eh.evaluate_at_q_integers(L(), n)
            if not rf_equal(got, FactoredRationalFunction.coerce(want)):
                return False
            if not rf_equal(got, eh.evaluate_at_q_integers(L(), n, "expanded")):
                return False
        return True

    def constant_and_degree():
        one = FactoredRationalFunction.coerce(1, P.ambient_dim)
        return rf_equal(L().constant_part(), one) and L().total_degree == max(
            sum(v) for v in P.vertices
        )

    def poly_translation():
        return all(eh.translate_polynomial_check(P, w, L()) for w in _translations(P))

    def reciprocity():
        return all(eh.reciprocity_check(P, n, L()) for n in range(1, bound + 1))

    def bilateral():
        return eh.bilateral_cancellation_check(P, bound)

    return [
        ("brion", "Brion's theorem: sum of vertex-cone transforms equals sigma_P", brion),
        ("vertex_cone_sum", "vertex-cone transforms sum to 1",
         lambda: eh.vertex_cone_sum_check(P, cts())),
        ("series_truncation", "series expansion matches sigma_{nP} for n <= bound", truncation),
        ("delta_vector", "delta_0 = 1, delta_1 = sigma_P - sum q^v, t-degree <= m - 1",
         delta_props),
        ("series_translation", "Ehr_{P+w}(t) = Ehr_P(q^w t) and delta_k shifts by q^{kw}",
         series_translation),
        ("stanley_cone_over", "Stanley reciprocity on the cone over P", stanley_cone_over),
        ("stanley_vertex_cones", "Stanley reciprocity on every vertex cone",
         stanley_vertex_cones),
        ("classical_counts", "q = 1 specialization counts lattice points of nP", classical),
        ("polynomial_oracle", "L_P([n]_q) = sigma_{nP}(q) for 0 <= n <= bound",
         needs_orthant(poly_oracle)),
        ("constant_and_degree", "L_P has constant part 1 and degree max_i |v_i|",
         needs_orthant(constant_and_degree)),
        ("polynomial_translation", "L_{P+w} = L_P * prod (1 + q_k x_k - x_k)^{w_k}",
         needs_orthant(poly_translation)),
        ("reciprocity", "L_P([-n]_q) = (-1)^d sigma_{interior of nP}(1/q)",
         needs_orthant(reciprocity)),
        ("bilateral_cancellation", "two-sided geometric series cancel at every vertex",
         needs_orthant(bilateral)),
    ]


def cmd_verify(P, args):
    items = []
    for name, statement, thunk in verification_checks(P, args.bound):
        result = thunk()
        status = "skipped" if result is None else ("pass" if result else "fail")
        items.append({"check": name, "statement": statement, "status": status})
    ok = all(i["status"] != "fail" for i in items)
    doc = {"bound": args.bound, "all_passed": ok, "checks": items}
    lines = []
    for i in items:
        line = f"{i['status'].upper():7} {i['check']}: {i['statement']}"
        if i["status"] == "skipped":
            line += " (needs the nonnegative orthant)"
        lines.append(line)
    lines.append("all checks passed" if ok else "some checks FAILED")
    return doc, "\n".join(lines), (0 if ok else 1)


def run(argv=None, out=None):
    """Run one job; returns the exit status."""
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    try:
        lam = _check_params(args)
        P = load_polytope(args.input)
        handler = globals()[f"cmd_{args.command}"]
        res = handler(P, args, lam) if args.command == "specialize" else handler(P, args)
    except EhrhartError as exc:
        out.write(json.dumps({"error": exc.to_dict()}) + "\n")
        return 2
    doc, text = res[0], res[1]
    status = res[2] if len(res) > 2 else 0
    if args.format == "json":
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(text + "\n")
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

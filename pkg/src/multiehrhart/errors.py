"""Exception types raised across the package.

Every error carries a short machine-readable ``code`` and the offending
``datum`` so the CLI can report it as a JSON object.
"""


class EhrhartError(Exception):
    code = "error"

    def __init__(self, message, datum=None):
        super().__init__(message)
        self.message = message
        self.datum = datum

    def to_dict(self):
        return {"code": self.code, "message": self.message, "datum": self.datum}


class ArityMismatch(EhrhartError, ValueError):
    code = "arity_mismatch"


class EmptyInput(EhrhartError, ValueError):
    code = "empty_input"


class DimensionMismatch(EhrhartError, ValueError):
    code = "dimension_mismatch"


class NotAVertex(EhrhartError, ValueError):
    code = "not_a_vertex"

    def __init__(self, index, point):
        super().__init__(
            f"point {index} {list(point)} is a convex combination of the others",
            {"index": index, "point": list(point)},
        )
        self.index = index


class NotPointed(EhrhartError, ValueError):
    code = "not_pointed"


class DependentGenerators(EhrhartError, ValueError):
    code = "dependent_generators"


class VanishingDenominatorFactor(EhrhartError, ZeroDivisionError):
    code = "vanishing_denominator_factor"


class ZeroHeightDenominatorFactor(EhrhartError, ValueError):
    code = "zero_height_denominator_factor"


class NegativeOrthantViolation(EhrhartError, ValueError):
    code = "negative_orthant_violation"

    def __init__(self, index, vertex):
        super().__init__(
            f"vertex {index} {list(vertex)} has a negative coordinate; "
            "the polytope must lie in the nonnegative orthant",
            {"index": index, "vertex": list(vertex)},
        )
        self.index = index


class NonGenericLinearForm(EhrhartError, ValueError):
    code = "non_generic_linear_form"

    def __init__(self, i, j, value):
        super().__init__(
            f"linear form takes the same value {value} on vertices {i} and {j}",
            {"vertices": [i, j], "value": value},
        )
        self.pair = (i, j)

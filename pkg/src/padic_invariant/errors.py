"""Exception types shared across the package.

Each carries a short machine-readable ``code`` that the CLI prints and maps
to an exit status.
"""


class NonExactDivision(ArithmeticError):
    code = "non-exact-division"


class DivisionByZeroPolynomial(ZeroDivisionError):
    code = "division-by-zero-polynomial"


class SingularPoint(ValueError):
    """Raised where a computation would divide by ``4x - 1`` at ``x = 1/4``."""

    code = "singular-point"


class InconsistencyError(ArithmeticError):
    """Two independent routes to the same exact quantity disagreed."""

    code = "internal-inconsistency"

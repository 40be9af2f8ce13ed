"""Exception taxonomy shared by all modules."""

from __future__ import annotations


class EntrolibError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(EntrolibError):
    """Operands belong to different coefficient fields."""


class DivisionByZero(EntrolibError, ZeroDivisionError):
    """Inversion or division by the zero scalar."""


class ContextMismatch(EntrolibError):
    """Operands belong to different variable contexts."""


class ZeroPolynomial(EntrolibError):
    """An operation that needs a nonzero polynomial received zero."""


class BudgetExceeded(EntrolibError):
    """A configured resource limit (terms, pairs, truncation level) was hit."""


class ParseError(EntrolibError):
    """Positioned syntax error.  Positions are 1-based."""

    def __init__(self, line: int, column: int, message: str,
                 expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.message = message
        self.expected = expected
        loc = f"{line}:{column}: {message}"
        if expected:
            loc += " (expected " + " or ".join(expected) + ")"
        super().__init__(loc)


class UnknownVariable(ParseError):
    """An identifier does not name a declared variable."""

    def __init__(self, line: int, column: int, name: str):
        self.name = name
        super().__init__(line, column, f"unknown variable '{name}'")


class SchemaError(EntrolibError):
    """A problem file violates the documented schema."""


class NotLocal(EntrolibError):
    """A proposed image has a nonzero constant term."""


class NotWellDefined(EntrolibError):
    """The map does not preserve the quotient ideal (global membership test)."""


class NotFiniteLength(EntrolibError):
    """The requested colength is infinite (or still growing at the budget)."""


class NotMPrimary(EntrolibError):
    """The given ideal is not primary to the maximal ideal."""


class NotMonomial(EntrolibError):
    """The operation needs an ideal generated by monomials."""


class NotMonomialMap(EntrolibError):
    """The operation needs a map whose images are single monomials."""


class SingularExponentMatrix(EntrolibError):
    """The monomial map is not finite (degenerate exponent data)."""


class InvarianceFailure(EntrolibError):
    """A minimal prime is not carried into itself by the map."""

    def __init__(self, prime: tuple[str, ...], message: str):
        self.prime = prime
        super().__init__(message)


class MissingDimension(EntrolibError):
    """The ring has no known Krull dimension but one is required."""


class Unstabilized(EntrolibError):
    """The Hilbert function tail is not yet polynomial; raise s_max."""

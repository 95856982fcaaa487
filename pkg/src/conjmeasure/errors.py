"""Exception hierarchy shared across the package."""


class ConjMeasureError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ConjMeasureError, ValueError):
    """Malformed textual input (partitions, cycle tuples, spec lists)."""


class DomainError(ConjMeasureError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class RefusalError(ConjMeasureError):
    """An exhaustive enumeration would exceed its configured bound."""


class ConsistencyError(ConjMeasureError, ArithmeticError):
    """An exact identity that must hold did not (e.g. a non-integral count)."""

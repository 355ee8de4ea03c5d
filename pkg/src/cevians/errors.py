"""Exception types shared by the engine, the oracle and the CLI.

Each concrete error carries an ``exit_code`` so the CLI can map it to a
distinct process status without a lookup table of its own.
"""


class GeometryError(Exception):
    exit_code = 10


class MalformedNumber(GeometryError, ValueError):
    exit_code = 11


class ZeroDenominator(GeometryError, ValueError):
    exit_code = 12


class DivisionByZero(GeometryError, ZeroDivisionError):
    exit_code = 13


class CoincidentPoints(GeometryError):
    exit_code = 14


class CoincidentLines(GeometryError):
    exit_code = 15


class PointAtInfinity(GeometryError):
    exit_code = 16


class TooFewVertices(GeometryError):
    exit_code = 17


class IndexOutOfRange(GeometryError, IndexError):
    exit_code = 18


class DegenerateDenominator(GeometryError, ZeroDivisionError):
    exit_code = 19


class BadParity(GeometryError, ValueError):
    exit_code = 20


class DegenerateReference(GeometryError):
    exit_code = 21


class MismatchFound(GeometryError, AssertionError):
    """Oracle and engine disagree. Carries the offending embedding."""

    exit_code = 22

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConfigParseError(GeometryError, ValueError):
    exit_code = 2


class InvalidConfig(GeometryError, ValueError):
    exit_code = 23

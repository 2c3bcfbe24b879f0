"""Exception hierarchy shared by every starcore module."""


class StarcoreError(Exception):
    """Base class for all library errors."""


class DivisionByZero(StarcoreError, ZeroDivisionError):
    pass


class ScalarParseError(StarcoreError, ValueError):
    pass


class MatrixFormatError(StarcoreError, ValueError):
    """Malformed matrix JSON or entries."""


class DimensionMismatch(StarcoreError, ValueError):
    pass


class NotIdempotent(StarcoreError, ValueError):
    pass


class NotProjection(StarcoreError, ValueError):
    pass


class NotTriangular(StarcoreError, ValueError):
    """Raised when p x (1-p) != 0 for a triangular construction."""


class SingularMatrix(StarcoreError, ArithmeticError):
    pass


class NoGroupInverse(StarcoreError, ArithmeticError):
    def __init__(self, message: str = "no group inverse: rank(A^2) < rank(A)"):
        super().__init__(message)


class HypothesisFailed(StarcoreError):
    """A named hypothesis of a constructive formula does not hold."""

    def __init__(self, hypothesis: str):
        super().__init__(f"hypothesis failed: {hypothesis}")
        self.hypothesis = hypothesis


class CertificateError(StarcoreError, AssertionError):
    """An internally computed object failed its own verification.

    This always indicates a bug; it is never raised for bad user input.
    """


class ZeroLambda(StarcoreError, ValueError):
    def __init__(self):
        super().__init__("lambda must be nonzero")


class GenerationExhausted(StarcoreError, RuntimeError):
    pass

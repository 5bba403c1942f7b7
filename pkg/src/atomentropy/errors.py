"""Exception types shared across the package.

Two roots matter for the CLI exit-code contract: DataError (bad input,
exit code 1) and NumericsError (a computation failed, exit code 2).
"""


class DataError(Exception):
    """Invalid or inconsistent input data."""


class BasisFormatError(DataError):
    """Basis or table file violates the expected grammar."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SupportMismatchError(DataError):
    """Reference density vanishes where the compared density does not."""


class NumericsError(Exception):
    """A numerical stage failed to meet its tolerance."""


class QuadratureError(NumericsError):
    """Adaptive integration hit its refinement limit without converging.

    Carries the best estimate and the reported error bound so callers can
    decide whether the partial result is still usable.
    """

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(f"{message} (estimate {estimate!r}, error bound {error!r})")
        self.estimate = estimate
        self.error = error

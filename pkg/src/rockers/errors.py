"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PrecisionError(ArithmeticError):
    """Requested digits or floors cannot be certified within the precision ceiling."""


class ToleranceError(PrecisionError):
    """An adaptive quadrature could not certify the requested error tolerance."""


class ThresholdNotFoundError(ArithmeticError):
    """No threshold exists in the scan window from which all bounds hold."""


class UsageError(Exception):
    """Bad command-line usage (mapped to exit code 2 by the CLI)."""

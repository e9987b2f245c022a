# src/utils/exceptions.py
from typing import Optional


class SpectraGraftError(Exception):
    """Base class for every error raised by spectra-graft"""


class GraphFormatError(SpectraGraftError, ValueError):
    """Malformed edge-list document. Carries the offending line number (1-based)."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GraphValidationError(SpectraGraftError, ValueError):
    pass


class DisconnectedGraphError(SpectraGraftError, ValueError):
    """Raised when an operation needs a connected graph. Names one vertex from two different components."""

    def __init__(self, first: int, second: int):
        self.representatives = (first, second)
        super().__init__(
            f"graph is disconnected: vertex {first} and vertex {second} lie in different components"
        )


class NotATreeError(SpectraGraftError, ValueError):
    pass


class FamilyConstraintError(SpectraGraftError, ValueError):
    """A tree family parameter violates its constraint. `constraint` holds the inequality verbatim."""

    def __init__(self, family: str, constraint: str):
        self.family = family
        self.constraint = constraint
        super().__init__(f"{family}: constraint violated: {constraint}")


class EnumerationCapError(SpectraGraftError, ValueError):
    pass


class OracleConvergenceError(SpectraGraftError, ArithmeticError):
    def __init__(self, off_norm: float, sweeps: int):
        self.off_norm = off_norm
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi oracle did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})"
        )


class TransformError(SpectraGraftError, ValueError):
    pass


class VerificationRangeError(SpectraGraftError, ValueError):
    pass


class ConfigError(SpectraGraftError, ValueError):
    pass

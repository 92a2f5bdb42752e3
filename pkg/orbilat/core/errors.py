"""Exception hierarchy. Each family maps to one CLI exit code."""

from typing import Any, Dict, List


class OrbilatError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 1


class InvariantViolation(OrbilatError):
    """An internal consistency check failed (exit 1)."""

    exit_code = 1


class FixtureError(InvariantViolation):
    """Shipped fixture data failed re-verification."""


class InputError(OrbilatError, ValueError):
    """User-supplied data is malformed or out of range (exit 2)."""

    exit_code = 2


class PreconditionError(InputError):
    """A documented precondition of an operation does not hold."""


class LatticeError(InputError):
    """Invalid lattice data: dependent rows, vector outside the span, non-integrality."""


class NotSublatticeError(LatticeError):
    def __init__(self, vector: Any) -> None:
        super().__init__(f"basis vector {vector} of the sublattice is not in the superlattice")
        self.vector = vector


class IsometryError(InputError):
    """A matrix does not define an isometry of the given lattice."""


class NotFixedPointFree(IsometryError):
    """The isometry has nonzero fixed vectors where a fixed-point-free one is required."""


class CodeError(InputError):
    """Invalid code data."""


class QuadraticFormError(InputError):
    """The discriminant group does not carry a p-elementary quadratic space."""


class DecompositionError(InputError):
    """A root set does not embed into copies of the extended A_{p-1} diagram."""


class BudgetExceeded(OrbilatError):
    """Wall-clock or search budget exhausted (exit 3); carries partial results."""

    exit_code = 3

    def __init__(self, message: str, partial: List[Any] | Dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.partial = partial if partial is not None else []

"""Exception hierarchy and warning categories shared across the package.

Each error class carries the process exit code the command-line front end
maps it to.
"""


class AfmregError(Exception):
    """Base class for all afmreg errors."""

    exit_code = 1


class ConfigError(AfmregError):
    """Malformed or incomplete configuration input."""

    exit_code = 2


class PhysicsDomainError(AfmregError, ValueError):
    """Inputs outside the physically meaningful domain of an operation."""

    exit_code = 3


class CriticalityError(PhysicsDomainError):
    """Effective field at or beyond the spin-flop critical field.

    The correlation length diverges and the magnon vacuum picture breaks
    down, so coupling kernels are undefined there.
    """

    exit_code = 3


class ConvergenceError(AfmregError):
    """A numerical scheme failed to reach its accuracy target."""

    exit_code = 4


class SizeCapError(AfmregError):
    """Requested system size exceeds a hard resource cap."""

    exit_code = 5


class CutoffWarning(UserWarning):
    """k-space cutoff leaves a non-negligible tail of the summand."""


class AccuracyWarning(UserWarning):
    """Evaluation outside the validity window of an approximation."""

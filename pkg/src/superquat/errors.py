"""Shared exception types."""


class SuperquatError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SuperquatError, ValueError):
    """Operands live over different rings/algebras, or an invariant on
    construction data is violated (non-unit parameter, bad modulus, ...)."""


class UnsupportedRingError(SuperquatError):
    """A solver was asked to run over a ring that is not a field."""


class EnumerationTooLargeError(SuperquatError):
    """Exhaustive enumeration requested over a ring too large to sweep."""


class InputNotDerivationError(SuperquatError):
    """An operation requiring genuine superderivations got something else."""


class InternalContradictionError(SuperquatError):
    """A mathematically guaranteed postcondition failed; indicates a bug."""

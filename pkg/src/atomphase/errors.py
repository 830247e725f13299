"""Exception types shared across the package."""

__all__ = [
    "AtomPhaseError",
    "DomainError",
    "DegenerateResultError",
    "PoleError",
    "UndefinedRatioError",
]


class AtomPhaseError(Exception):
    """Base class for every error raised by this package."""


class DomainError(AtomPhaseError, ValueError):
    """An argument lies outside the physical domain of an operation."""


class DegenerateResultError(AtomPhaseError):
    """The requested quantity is mathematically undefined for these inputs.

    Raised e.g. when incident and scattered amplitudes cancel exactly (the
    phase of a null field) or when a mirror keeps no re-collimated rays.
    """


class PoleError(AtomPhaseError):
    """A closed-form expression was evaluated at a pole of its denominator."""


class UndefinedRatioError(AtomPhaseError):
    """A relative error was requested against a vanishing reference value."""

"""Exception types raised by conformal_states."""

from __future__ import annotations


class ConformalStatesError(Exception):
    """Base class for all library errors."""


class DomainViolation(ConformalStatesError, ValueError):
    """A point lies outside the domain an operation requires."""


class SingularMatrix(ConformalStatesError, ArithmeticError):
    """A matrix that must be inverted (or raised to a negative power) is singular."""


class InvalidScaleDimension(ConformalStatesError, ValueError):
    """Scale dimension outside the range an operation supports."""


class InvalidSpin(ConformalStatesError, ValueError):
    """Spin label for which a closed form is undefined."""


class InvalidIndex(ConformalStatesError, ValueError):
    """Basis label violating its lattice constraints."""


class ModeMismatch(ConformalStatesError, ValueError):
    """Operator and Fock vector act on different numbers of modes."""

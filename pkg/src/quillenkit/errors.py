"""Exception hierarchy shared by every module."""


class QuillenKitError(Exception):
    """Base class for all errors raised by quillenkit."""


class SizeCapError(QuillenKitError):
    """A dense matrix or complex would exceed the configured entry cap."""


class ValidationError(QuillenKitError, ValueError):
    """Input data violates a structural invariant or a documented schema."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class GroupAxiomError(ValidationError):
    """A multiplication table fails a group axiom.

    ``triple`` holds the offending elements, e.g. ``(a, b, c)`` for an
    associativity failure ``(ab)c != a(bc)``.
    """

    def __init__(self, message, triple=()):
        super().__init__(message, field="table")
        self.triple = tuple(triple)


class NotHomomorphismError(ValidationError):
    pass


class NotEquivariantError(ValidationError):
    pass


class DegreeError(QuillenKitError, ValueError):
    """Requested degree lies outside the range the data supports."""


class GuardError(QuillenKitError, ValueError):
    """A ring presentation falls outside the monomial/univariate guard."""


class InfiniteHomSetError(QuillenKitError, ValueError):
    """A hom-set to enumerate is infinite; pass finite coefficients."""

"""Exception hierarchy shared by every module."""


class GenPosError(Exception):
    """Base class for all errors raised by genpos."""


class ParameterError(GenPosError, ValueError):
    """An argument is outside the domain of the operation."""


class ParseError(GenPosError, ValueError):
    """Malformed graph text (edge list, graph6, family spec)."""


class CapacityError(GenPosError):
    """The input is larger than the operation supports."""


class ContractError(GenPosError, AssertionError):
    """A precondition or a postcondition was violated.

    A construction whose output fails verification raises this with the
    failing set attached; it is never swallowed.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedClassError(GenPosError):
    """No construction applies to the given graph."""

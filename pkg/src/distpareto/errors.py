"""Exception hierarchy shared by every module of the package."""


class ParetoError(Exception):
    """Base class for all errors raised by :mod:`distpareto`."""


class InvalidParameterError(ParetoError, ValueError):
    """An argument is outside the domain of the operation."""


class OutOfRangeError(InvalidParameterError):
    """A requested index or graph order is outside the supported range.

    ``size`` carries the relevant bound (for example ``|Pi(G)|`` when a
    k-th Pareto value is requested that does not exist).
    """

    def __init__(self, message, size=None):
        super().__init__(message)
        self.size = size


class DomainError(ParetoError, ValueError):
    """Input violates a structural invariant (e.g. a disconnected graph)."""

    def __init__(self, message, components=None, ordinal=None):
        super().__init__(message)
        self.components = components
        self.ordinal = ordinal


class MalformedInputError(ParetoError, ValueError):
    """A graph6 token could not be decoded."""

    def __init__(self, message, ordinal=None):
        super().__init__(message)
        self.ordinal = ordinal


class ResourceError(ParetoError):
    """An enumeration budget would be exceeded; ``required`` is the order needed."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class NumericError(ParetoError, ArithmeticError):
    """An iterative method failed to converge; ``residual`` is the last value seen."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual

"""Exception hierarchy shared by every engine module."""


class VertexEngineError(Exception):
    """Base class for all errors raised by the engine."""


class InputError(VertexEngineError, ValueError):
    """Malformed or inadmissible input."""


class PoleError(VertexEngineError, ZeroDivisionError):
    """A weight or formula denominator vanished.

    Parameters
    ----------
    message:
        Human readable description.
    points:
        The rapidities (or other arguments) at which the pole was hit.
    """

    def __init__(self, message: str, points: tuple = ()):
        super().__init__(message)
        self.points = tuple(points)


class LimitDivergence(VertexEngineError, ArithmeticError):
    """lim b*f(b) does not exist because f does not decay at infinity."""


class SampleCollision(VertexEngineError):
    """Every candidate sample point hit a pole of the function being sampled."""


class VerificationFailure(VertexEngineError):
    """Two independent evaluations of the same quantity disagree."""

    def __init__(self, message: str, values: dict | None = None):
        super().__init__(message)
        self.values = dict(values or {})


class SearchExhausted(VertexEngineError):
    """The Bethe root search stopped without certifying an outcome."""

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})

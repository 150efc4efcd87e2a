"""Exception hierarchy shared across the package."""


class KCriticalError(Exception):
    """Base class for all package errors."""


class GraphInputError(KCriticalError, ValueError):
    """Malformed graph input (self-loop, bad index, bad graph6 line)."""


class ParameterError(KCriticalError, ValueError):
    """Parameters outside the admissible range (even b, k < 1, n < k+2, ...)."""


class CapacityError(KCriticalError):
    """An exhaustive routine was asked to run above its enumeration cap."""


class PreconditionError(ParameterError):
    """A verifier was called at a point where its hypotheses do not hold."""


class SamplingError(KCriticalError):
    """Rejection sampling exhausted its retry budget."""


class InvariantViolation(KCriticalError, AssertionError):
    """A checked contract (strict inequality, agreement) failed."""

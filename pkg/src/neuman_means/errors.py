class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConsistencyError(ArithmeticError):
    """Two exact computations of the same quantity disagree.

    This only fires on a transcription bug in a closed-form expression.
    """

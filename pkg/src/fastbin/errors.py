"""Exception types raised by fastbin."""


class FastbinError(Exception):
    """Base class for all fastbin errors."""


class TooFewBoundaries(FastbinError, ValueError):
    """Fewer than two boundary values were supplied."""


class NotStrictlyIncreasing(FastbinError, ValueError):
    """Boundaries are not strictly increasing; ``index`` is the first offender."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"boundaries not strictly increasing at index {index}")


class NonFiniteBoundary(FastbinError, ValueError):
    """A boundary value is NaN or infinite."""


class NonFiniteInput(FastbinError, ValueError):
    """A query value is NaN or infinite; ``index`` is set for batch inputs."""

    def __init__(self, message="non-finite query value", index=None):
        self.index = index
        if index is not None:
            message = f"{message} at index {index}"
        super().__init__(message)


class InvalidGridSpan(FastbinError, ValueError):
    """The grid cell width would underflow to zero or overflow to infinity."""


class SlotValueOutOfRange(FastbinError, ValueError):
    """Requested slot value j lies outside 0..m1."""


class TooLargeToEnumerate(FastbinError, ValueError):
    """The composition count exceeds the enumeration guard."""


class DegenerateModel(FastbinError, ValueError):
    """The occupancy model has too few cells for slot probabilities."""


class EmptyTail(FastbinError, ValueError):
    """No slot can hold more than two values, so the tail mean is undefined."""


class RangeTooNarrow(FastbinError, ValueError):
    """The requested range cannot hold the required number of distinct values."""


class ConfigInvalid(FastbinError, ValueError):
    """A benchmark configuration violates its invariants."""


class OracleMismatch(FastbinError, RuntimeError):
    """The accelerated binner disagreed with the binary-search oracle.

    This indicates an internal bug; benchmarks abort rather than time a
    wrong implementation.
    """

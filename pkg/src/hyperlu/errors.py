"""Exception types shared across the package."""

from __future__ import annotations


class HyperluError(Exception):
    """Base class for all package-specific errors."""


class VertexRangeError(HyperluError, ValueError):
    """A vertex index lies outside the state's vertex set."""


class DimensionMismatchError(HyperluError, ValueError):
    """Two objects that must share a size do not."""


class NonDyadicError(HyperluError, ValueError):
    """An exponent is not a dyadic rational."""


class SizeLimitError(HyperluError, ValueError):
    """An operation exceeded its configured size cap."""


class PreconditionError(HyperluError, ValueError):
    """A rewrite-rule precondition failed.

    ``edge`` carries the offending edge when one exists.
    """

    def __init__(self, message: str, edge: tuple[int, ...] | None = None):
        super().__init__(message)
        self.edge = edge


class SequenceStepError(HyperluError, ValueError):
    """A gate sequence failed; ``step`` is the zero-based failing index."""

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


class InconclusiveError(HyperluError):
    """A decision procedure ran out of budget before reaching a verdict.

    Deliberately distinct from a negative answer: callers must never
    treat this as "not equivalent".
    """


class CancellationError(HyperluError):
    """Fractional or higher-cardinality edges survived a derivation.

    ``ledger`` holds the weight bookkeeping that shows which edges
    failed to cancel.
    """

    def __init__(self, message: str, ledger=None):
        super().__init__(message)
        self.ledger = ledger

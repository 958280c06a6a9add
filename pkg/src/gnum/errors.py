"""Exception taxonomy for the gnum library.

Exit-code mapping used by the CLI: validation problems exit 2, budget and
divergence-domain problems exit 3, usage problems exit 64.
"""


class GnumError(Exception):
    """Base class for all library errors."""


class SpacingMismatchError(GnumError):
    """Two grid measures with different node spacings were combined."""


class InvalidPrimeMeasureError(GnumError):
    """A prime measure carries mass at x = 1 (node 0)."""


class NotNormalizedError(GnumError):
    """log_conv input does not have unit mass at node 0."""


class NonInvertibleError(GnumError):
    """inv_conv input has zero mass at node 0."""


class DomainError(GnumError):
    """Argument outside the mathematical domain of an operation."""


class DivergenceDomainError(DomainError):
    """Evaluation requested where the defining series/integral diverges."""


class UnsupportedOperationError(GnumError):
    """Operation undefined for this kind of prime system."""


class BudgetExceededError(GnumError):
    """Enumeration would exceed the configured element budget."""

    def __init__(self, budget: int, message: str | None = None):
        self.budget = budget
        super().__init__(message or f"element budget of {budget} exceeded")


class ValidationError(GnumError):
    """A system description violated one or more invariants.

    ``issues`` lists every violation found, not just the first.
    """

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(self.issues))


class GridPlacementWarning(UserWarning):
    """An atom was binned to a node more than h/4 away from its position."""

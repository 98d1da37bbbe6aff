"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`BimodalError`
so the CLI can map it to exit status 2 in one place.
"""

from __future__ import annotations


class BimodalError(Exception):
    """Base class for all package errors."""


class InvalidElementError(BimodalError, ValueError):
    pass


class AmbientMismatchError(BimodalError, ValueError):
    pass


class EmptySetError(BimodalError, ValueError):
    pass


class DisjointnessError(BimodalError, ValueError):
    pass


class SetIndexError(BimodalError, IndexError):
    pass


class OrderCapError(BimodalError, ValueError):
    pass


class ClassificationRefusedError(BimodalError):
    """Raised when a non-bimodal collection is handed to the classifier."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"collection is not bimodal: {verdict.describe()}")


class TheoremViolationError(BimodalError, AssertionError):
    """A structural consequence of bimodality failed to hold.

    Only an implementation bug can trigger this on bimodal input.
    """


# constructors
class ConstructionError(BimodalError, ValueError):
    pass


class DuplicateCosetError(ConstructionError):
    pass


class NotAPartitionError(ConstructionError):
    pass


class IndexConditionError(ConstructionError):
    pass


class PartitionError(ConstructionError):
    pass


class SubdivisionHypothesisError(ConstructionError):
    pass


class NotAStarError(ConstructionError):
    pass


class InteriorTilingError(ConstructionError):
    pass


class GenerationError(ConstructionError):
    pass


class TilingSubgroupError(ConstructionError):
    pass


class TilingError(ConstructionError):
    pass


class BudgetExceededError(BimodalError):
    def __init__(self, cost: int, budget: int):
        self.cost = cost
        self.budget = budget
        super().__init__(
            f"enumeration would examine {cost} candidate partitions, over the budget of {budget}"
        )


class SchemaError(BimodalError, ValueError):
    pass

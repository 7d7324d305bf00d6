"""Exception types shared across the package."""

from __future__ import annotations


class RankMetricError(Exception):
    """Base class for all package-specific errors."""


class FieldConstructionError(RankMetricError):
    """Invalid tower parameters: non-prime p, reducible modulus, size limit."""


class NotGabidulinVectorError(RankMetricError):
    """Vector entries are not linearly independent over the base field."""


class NotMrdError(RankMetricError):
    """Operation requires an MRD input and the code is not MRD."""


class NotLiftedError(RankMetricError):
    """Operation requires a lifted (extension-field-linear) code."""


class UnsupportedStructureError(RankMetricError):
    """Idealiser structure outside the supported recognition cases.

    Carries the computed idealiser bases so callers can still report them.
    """

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


class StructuralViolationError(RankMetricError):
    """Computed group data contradicts the predicted structure."""


class BudgetExceededError(RankMetricError):
    """Enumeration budget exhausted; carries the partial result proven so far.

    ``upper_bound`` is the smallest rank seen among enumerated words (a proven
    upper bound on the minimum distance), ``checked``/``total`` count words.
    """

    def __init__(self, message, upper_bound=None, checked=0, total=0):
        super().__init__(message)
        self.upper_bound = upper_bound
        self.checked = checked
        self.total = total

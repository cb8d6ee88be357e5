"""Exception hierarchy for labeling, parsing and search errors."""

from __future__ import annotations

from typing import Optional


class LabelingError(ValueError):
    """Base class for every error raised on invalid user input."""


class OrderError(LabelingError):
    """Vertex count outside the domain of the requested operation."""


class InvalidPairError(LabelingError):
    """An edge pair that is not 1 <= i < j <= n (or not a canonical arc)."""


class LabelOutOfRangeError(LabelingError):
    """An edge label outside 1..C(n,2)."""


class VertexIndexError(LabelingError):
    """A vertex index outside 1..n."""


class NonBijectiveLabelingError(LabelingError):
    """A labeling that is not a bijection onto the required label range."""


class EdgeListFormatError(LabelingError):
    """Malformed edge-list text, tagged with the 1-based line number."""

    def __init__(self, message: str, line_no: Optional[int] = None) -> None:
        self.line_no = line_no
        self.detail = message
        super().__init__(f"line {line_no}: {message}" if line_no is not None else message)


class SearchCapExceededError(LabelingError):
    """Exhaustive search requested on more edges than the cap allows."""

    def __init__(self, edges: int, cap: int) -> None:
        self.edges = edges
        self.cap = cap
        super().__init__(
            f"graph has {edges} edges, above the search cap of {cap}; "
            f"raise it with --cap {edges} if the runtime is acceptable"
        )


class ScanLimitError(LabelingError):
    """Scan range wider than the configured span."""


class OrderLimitError(OrderError):
    """Vertex count above the configured work limit."""

    def __init__(self, n: int, max_order: int) -> None:
        self.n = n
        self.max_order = max_order
        super().__init__(
            f"n={n} is above the work limit of {max_order}; "
            f"raise it with --max-order {n} if the runtime is acceptable"
        )


class InvalidLimitError(LabelingError):
    """A work limit set to a value outside its allowed range."""


class IntegralityError(ArithmeticError):
    """A closed-form numerator is not divisible by its denominator."""

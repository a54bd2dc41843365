"""Library exceptions."""

from typing import Optional


class FibWordsError(Exception):
    """Base exception for library errors."""


class InvalidParamsError(FibWordsError, ValueError):
    """Raised when (a, b, convention) do not describe a word family."""


class WordTooLargeError(FibWordsError):
    """Raised when a word would exceed the configured size cap."""

    def __init__(self, length: int, cap: int):
        self.length = length
        self.cap = cap
        super().__init__(f"word too large: {length} symbols exceeds the cap of {cap}")


class PreconditionError(FibWordsError):
    """Raised when an operation is called outside its domain."""


class UndefinedWordError(PreconditionError):
    """Raised when t or p is requested for a word with fewer than two symbols."""

    def __init__(self, name: str, a: int, b: int, n: int):
        self.name = name
        self.a = a
        self.b = b
        self.n = n
        super().__init__(
            f"{name} undefined: f({a},{b},{n}) has fewer than two symbols"
        )


class NTooSmallError(PreconditionError):
    """Raised when n is below the minimum of a decomposition case."""

    def __init__(self, case: str, n: int, minimum: int):
        """Initialize NTooSmallError.

        Args:
            case: Name of the parity case that was selected.
            n: Requested level.
            minimum: Smallest level accepted for that case.
        """
        self.case = case
        self.n = n
        self.minimum = minimum
        super().__init__(
            f"n too small for this parity case ({case}): n={n}, minimum n = {minimum}"
        )


class DepthExhaustedError(PreconditionError):
    """Raised when refinement would descend below a case minimum."""

    def __init__(self, depth: int, level: int, minimum: int):
        self.depth = depth
        self.level = level
        self.minimum = minimum
        super().__init__(
            f"depth exhausts minimum level: step {depth} needs level {level} "
            f"to be at least {minimum}"
        )


class StructureError(FibWordsError):
    """Base exception for cell structures that do not flatten."""


class OverlapConflictError(StructureError):
    """Raised when two overlapping cells disagree on a symbol."""

    def __init__(self, position: int, first_cell: int, second_cell: int):
        self.position = position
        self.first_cell = first_cell
        self.second_cell = second_cell
        super().__init__(
            f"overlap conflict at position {position} between cell {first_cell} "
            f"and cell {second_cell}"
        )


class CoverageGapError(StructureError):
    """Raised when no cell covers a position of the parent word."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"gap at position {position}")


class ConstructionMismatchError(FibWordsError):
    """Raised when an internal word identity fails at build time.

    Attributes:
        position: First differing symbol index, when known.
    """

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        super().__init__(message)
        self.position = position


class RangeSyntaxError(FibWordsError, ValueError):
    """Raised when a "lo..hi" range cannot be parsed."""

    def __init__(self, text: str, reason: str):
        self.text = text
        self.reason = reason
        super().__init__(f"invalid range '{text}': {reason}")

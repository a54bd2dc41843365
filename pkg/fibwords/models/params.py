"""Word family parameters and the parity-dependent (r, s) pair."""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from fibwords.exceptions import InvalidParamsError


class Convention(str, Enum):
    """Initial-condition conventions.

    STANDARD uses f0 = 0 and f1 = 0^(a-1)1. CLASSICAL_SWAPPED (a = b = 1 only)
    uses f0 = 1 and f1 = 0, which exchanges the roles of the two symbols
    without changing any cell structure.
    """

    STANDARD = "standard"
    CLASSICAL_SWAPPED = "classical-swapped"


@dataclass(frozen=True)
class Params:
    """The pair (a, b) plus the initial-condition convention.

    Attributes:
        a: Exponent used at even levels.
        b: Exponent used at odd levels.
        convention: Initial-condition convention.
    """

    a: int
    b: int
    convention: Convention = Convention.STANDARD

    def __post_init__(self) -> None:
        if isinstance(self.a, bool) or not isinstance(self.a, int) or self.a < 1:
            raise InvalidParamsError(f"a must be a positive integer, got {self.a!r}")
        if isinstance(self.b, bool) or not isinstance(self.b, int) or self.b < 1:
            raise InvalidParamsError(f"b must be a positive integer, got {self.b!r}")
        convention = Convention(self.convention)
        object.__setattr__(self, "convention", convention)
        if convention is Convention.CLASSICAL_SWAPPED and (self.a, self.b) != (1, 1):
            raise InvalidParamsError(
                "the classical-swapped convention requires a = b = 1, "
                f"got a={self.a}, b={self.b}"
            )

    @classmethod
    def classical(cls) -> "Params":
        """Classical Fibonacci words: a = b = 1 with swapped initial conditions."""
        return cls(1, 1, Convention.CLASSICAL_SWAPPED)

    @property
    def has_unit_parameter(self) -> bool:
        """True when a = 1 or b = 1, which shifts most minimum levels by one."""
        return self.a == 1 or self.b == 1

    @property
    def is_classical(self) -> bool:
        return self.convention is Convention.CLASSICAL_SWAPPED

    def __str__(self) -> str:
        suffix = ", classical-swapped" if self.is_classical else ""
        return f"({self.a},{self.b}{suffix})"


class ParityPair(NamedTuple):
    """The most recently (r) and previously (s) used exponent at a level."""

    r: int
    s: int

"""Verification outcomes for the word identities."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from fibwords.models.params import Params


class IdentityId(str, Enum):
    """Identities checked by the verifier, in report order."""

    SUFFIX_PARITY = "SUFFIX_PARITY"
    PALINDROME = "PALINDROME"
    EXCHANGE = "EXCHANGE"
    SWAP_FT = "SWAP_FT"
    SWAP_FF = "SWAP_FF"
    BOUNDARY_OVERLAP = "BOUNDARY_OVERLAP"
    I_EQUALS_FFT = "I_EQUALS_FFT"
    F_SQUARED = "F_SQUARED"
    LEMMA_R_EVEN = "LEMMA_R_EVEN"
    LEMMA_BOTH_ODD = "LEMMA_BOTH_ODD"
    LEMMA_ODD_EVEN = "LEMMA_ODD_EVEN"
    TABLE1_ROW1 = "TABLE1_ROW1"
    TABLE1_ROW2 = "TABLE1_ROW2"
    TABLE1_ROW3 = "TABLE1_ROW3"
    I_VARIANT_R1 = "I_VARIANT_R1"
    BALANCED = "BALANCED"

    @property
    def rank(self) -> int:
        """Position in declaration order, used to sort reports."""
        return list(IdentityId).index(self)


class ReportStatus(str, Enum):
    """Outcome of one identity check."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped-precondition"


@dataclass(frozen=True)
class Mismatch:
    """First disagreement between the two sides of an identity.

    Attributes:
        position: Symbol index of the first difference.
        left: Symbol of the directly generated side ("" past its end).
        right: Symbol of the formula side ("" past its end).
    """

    position: int
    left: str
    right: str

    def describe(self) -> str:
        return (
            f"first mismatch at position {self.position}: "
            f"left={self.left or '<end>'} right={self.right or '<end>'}"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity at one (a, b, n).

    Attributes:
        identity: Which identity was checked.
        params: Word family parameters.
        n: Level the identity was instantiated at.
        status: pass, fail or skipped-precondition.
        detail: Mismatch description, skip reason or annotation.
        mismatch: First differing symbol when the check failed.
        elapsed: Wall time of the check in seconds (ignored by equality).
    """

    identity: IdentityId
    params: Params
    n: int
    status: ReportStatus
    detail: Optional[str] = None
    mismatch: Optional[Mismatch] = None
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        if self.status is ReportStatus.FAIL and not self.detail:
            raise ValueError("failed reports must carry a detail")

    @property
    def failed(self) -> bool:
        return self.status is ReportStatus.FAIL

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.params.a, self.params.b, self.n, self.identity.rank)

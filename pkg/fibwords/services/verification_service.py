"""Brute-force verification of the word identities over parameter grids.

Each identity is checked by building its left side by direct generation and
its right side from the identity's own formula, then comparing symbol for
symbol. Precondition misses and oversized words become skipped reports;
mismatches become failed reports. Nothing here raises for a failing case.
"""

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from fibwords.config import Settings, get_settings
from fibwords.exceptions import (
    ConstructionMismatchError,
    PreconditionError,
    StructureError,
    WordTooLargeError,
)
from fibwords.models.cell import DecompositionCase
from fibwords.models.params import Params
from fibwords.models.report import IdentityId, Mismatch, ReportStatus, VerificationReport
from fibwords.models.word import Word
from fibwords.services.cell_service import CellService, get_cell_service
from fibwords.services.word_service import first_difference, length_f, lengths, rs
from fibwords.workers.grid import GridRunner

logger = logging.getLogger(__name__)
# Smallest n each identity is stated for when a, b >= 2.
IDENTITY_MINIMUM_N: dict[IdentityId, int] = {
    IdentityId.SUFFIX_PARITY: 3,
    IdentityId.PALINDROME: 3,
    IdentityId.EXCHANGE: 3,
    IdentityId.SWAP_FT: 5,
    IdentityId.SWAP_FF: 5,
    IdentityId.BOUNDARY_OVERLAP: 5,
    IdentityId.I_EQUALS_FFT: 5,
    IdentityId.F_SQUARED: 6,
    IdentityId.LEMMA_R_EVEN: 7,
    IdentityId.LEMMA_BOTH_ODD: 8,
    IdentityId.LEMMA_ODD_EVEN: 9,
    IdentityId.TABLE1_ROW1: 7,
    IdentityId.TABLE1_ROW2: 8,
    IdentityId.TABLE1_ROW3: 9,
    IdentityId.I_VARIANT_R1: 5,
    IdentityId.BALANCED: 0,
}

# Minimums that do not move when a or b is 1.
_UNSHIFTED = frozenset(
    {IdentityId.SUFFIX_PARITY, IdentityId.PALINDROME, IdentityId.BALANCED}
)

# Statement each identity checks, listed by `fibwords verify --help`.
IDENTITY_STATEMENTS: dict[IdentityId, str] = {
    IdentityId.SUFFIX_PARITY: "f(n) ends in 01 or 10, alternating with n (stated: even n -> 01)",
    IdentityId.PALINDROME: "p(n) is a palindrome",
    IdentityId.EXCHANGE: "f(n-1) p(n-2) = f(n-2) p(n-1)",
    IdentityId.SWAP_FT: "f(n-1) f(n-2) = f(n-2) t(n-1)",
    IdentityId.SWAP_FF: "f(n-1) t(n-2) = f(n-2) f(n-1)",
    IdentityId.BOUNDARY_OVERLAP: "f(n) ends in f(n-1)^(r-2) f(n-2) and t(n) begins with it",
    IdentityId.I_EQUALS_FFT: "I(n) = f(n-1)^2 t(n)",
    IdentityId.F_SQUARED: "f(n)^2 = f(n-1)^r I(n-1) t(n-1)^(r-1)",
    IdentityId.LEMMA_R_EVEN: "r even: f(n) = (f(n-2)^s I(n-2) t(n-2)^(s-1))^(r/2) f(n-2)",
    IdentityId.LEMMA_BOTH_ODD: "r, s odd: f(n) from f(n-2)^2, t(n-3), f(n-3)",
    IdentityId.LEMMA_ODD_EVEN: "r odd, s even: f(n) from f(n-3)^2, t(n-4), f(n-4)",
    IdentityId.TABLE1_ROW1: "r even: cells at level n-2 flatten to f(n)",
    IdentityId.TABLE1_ROW2: "r, s odd: cells at level n-3 (and n-6 composed) flatten to f(n)",
    IdentityId.TABLE1_ROW3: "r odd, s even: cells at level n-4 flatten to f(n)",
    IdentityId.I_VARIANT_R1: "r = 1: f(n), f(n), t(n) overlapping by f(n-2) give f(n-1)^2 t(n)",
    IdentityId.BALANCED: "every length-m factor of f(n) has one of two consecutive 1-counts",
}


class _Skip(Exception):
    """Internal signal: the identity does not apply at this (a, b, n)."""


def identity_minimum_n(identity: IdentityId, params: Params) -> int:
    """Smallest n the identity is checked at for these parameters."""
    base = IDENTITY_MINIMUM_N[identity]
    if identity in _UNSHIFTED or not params.has_unit_parameter:
        return base
    return base + 1


def check_balanced(word: Word, max_factor_len: int) -> bool:
    """True iff, for every m <= max_factor_len, the 1-counts of all length-m
    factors of ``word`` take at most two consecutive values.

    Raises:
        PreconditionError: If max_factor_len exceeds the word length.
    """
    if max_factor_len > len(word):
        raise PreconditionError(
            f"max_factor_len {max_factor_len} exceeds word length {len(word)}"
        )
    ones = np.frombuffer(word.symbols.encode("ascii"), dtype=np.uint8) - ord("0")
    prefix = np.concatenate(([0], np.cumsum(ones, dtype=np.int64)))
    for m in range(1, max_factor_len + 1):
        counts = prefix[m:] - prefix[:-m]
        if int(counts.max()) - int(counts.min()) > 1:
            return False
    return True


def _mismatch(left: str, right: str, position: int) -> Mismatch:
    return Mismatch(
        position=position,
        left=left[position] if position < len(left) else "",
        right=right[position] if position < len(right) else "",
    )


@dataclass(frozen=True)
class _Outcome:
    status: ReportStatus
    detail: Optional[str] = None
    mismatch: Optional[Mismatch] = None


_PASS = _Outcome(ReportStatus.PASS)


def _compare(left: str, right: str, what: str = "") -> _Outcome:
    position = first_difference(left, right)
    if position is None:
        return _PASS
    mismatch = _mismatch(left, right, position)
    prefix = f"{what}: " if what else ""
    return _Outcome(ReportStatus.FAIL, prefix + mismatch.describe(), mismatch)




_Task = tuple[IdentityId, Params, int, int]


def grid_params(
    a_range: Iterable[int], b_range: Iterable[int], classical: bool = False
) -> list[Params]:
    """Parameter pairs of a grid in (a, b) order; ``classical`` only touches (1, 1)."""
    b_values = list(b_range)
    return [
        Params.classical() if classical and (a, b) == (1, 1) else Params(a, b)
        for a in a_range
        for b in b_values
    ]


def _grid_levels(params: Params, n_max: int, cap: int) -> range:
    n = 0
    while n <= n_max:
        try:
            if length_f(params, n) > cap:
                break
        except WordTooLargeError:
            break
        n += 1
    return range(n)


class VerificationService:
    """Service checking identities one at a time or over a whole grid.

    Attributes:
        settings: Application settings for caps, factor length and workers.
        cells: Cell service used by the decomposition identities.
        words: Word service every side of an identity is built with.
    """

    CHECKS: dict[IdentityId, str] = {
        IdentityId.SUFFIX_PARITY: "_check_suffix_parity",
        IdentityId.PALINDROME: "_check_palindrome",
        IdentityId.EXCHANGE: "_check_exchange",
        IdentityId.SWAP_FT: "_check_swap_ft",
        IdentityId.SWAP_FF: "_check_swap_ff",
        IdentityId.BOUNDARY_OVERLAP: "_check_boundary_overlap",
        IdentityId.I_EQUALS_FFT: "_check_i_equals_fft",
        IdentityId.F_SQUARED: "_check_f_squared",
        IdentityId.LEMMA_R_EVEN: "_check_lemma_r_even",
        IdentityId.LEMMA_BOTH_ODD: "_check_lemma_both_odd",
        IdentityId.LEMMA_ODD_EVEN: "_check_lemma_odd_even",
        IdentityId.TABLE1_ROW1: "_check_table_row1",
        IdentityId.TABLE1_ROW2: "_check_table_row2",
        IdentityId.TABLE1_ROW3: "_check_table_row3",
        IdentityId.I_VARIANT_R1: "_check_i_variant_r1",
        IdentityId.BALANCED: "_check_balanced",
    }

    def __init__(
        self,
        cells: Optional[CellService] = None,
        settings: Optional[Settings] = None,
    ) -> None:
        """Initialize the verification service.

        Args:
            cells: Cell service; the shared one when omitted. Its word
                service is used for every generated word.
            settings: Application settings; the cached settings when omitted.
        """
        self.settings = settings or get_settings()
        self.cells = cells or get_cell_service()
        self.words = self.cells.words

    def _require_case(self, params: Params, n: int, case: DecompositionCase) -> None:
        actual = self.cells.classify(params, n)
        if actual is not case:
            raise _Skip(
                f"requires the {case.value} case, "
                f"({params.a},{params.b},{n}) is {actual.value}"
            )

    def _check_suffix_parity(self, params: Params, n: int, cap: int) -> _Outcome:
        observed = self.words.f_symbols(params, n, cap)[-2:]
        stated = "01" if n % 2 == 0 else "10"
        direction = "matches" if observed == stated else "is opposite to"
        note = f"observed suffix {observed}; {direction} the stated direction (even n -> 01)"
        if observed not in ("01", "10"):
            return _Outcome(ReportStatus.FAIL, note)
        if n >= 4:
            previous = self.words.f_symbols(params, n - 1, cap)[-2:]
            if previous == observed:
                return _Outcome(
                    ReportStatus.FAIL,
                    f"{note}; suffix did not flip from n-1 ({previous})",
                )
        return _Outcome(ReportStatus.PASS, note)

    def _check_palindrome(self, params: Params, n: int, cap: int) -> _Outcome:
        p = self.words.palindromic_prefix(params, n, cap)
        return _compare(p.symbols, p.reverse().symbols)

    def _check_exchange(self, params: Params, n: int, cap: int) -> _Outcome:
        f1 = self.words.f_symbols(params, n - 1, cap)
        f2 = self.words.f_symbols(params, n - 2, cap)
        return _compare(f1 + f2[:-2], f2 + f1[:-2])

    def _check_swap_ft(self, params: Params, n: int, cap: int) -> _Outcome:
        f1 = self.words.f_symbols(params, n - 1, cap)
        f2 = self.words.f_symbols(params, n - 2, cap)
        return _compare(f1 + f2, f2 + self.words.t_symbols(params, n - 1, cap))

    def _check_swap_ff(self, params: Params, n: int, cap: int) -> _Outcome:
        f1 = self.words.f_symbols(params, n - 1, cap)
        f2 = self.words.f_symbols(params, n - 2, cap)
        return _compare(f1 + self.words.t_symbols(params, n - 2, cap), f2 + f1)

    def _check_boundary_overlap(self, params: Params, n: int, cap: int) -> _Outcome:
        r = rs(params, n).r
        if r < 2:
            raise _Skip("requires r(n) >= 2")
        table = lengths(params, n)
        shared = (r - 2) * table[n - 1] + table[n - 2]
        f = self.words.f_symbols(params, n, cap)
        return _compare(f[len(f) - shared :], self.words.t_symbols(params, n, cap)[:shared])

    def _fft(self, params: Params, n: int, cap: int) -> str:
        f1 = self.words.f_symbols(params, n - 1, cap)
        return f1 + f1 + self.words.t_symbols(params, n, cap)

    def _check_i_equals_fft(self, params: Params, n: int, cap: int) -> _Outcome:
        return _compare(
            self._fft(params, n, cap), self.words.overlap_I_symbols(params, n, cap)
        )

    def _check_i_variant_r1(self, params: Params, n: int, cap: int) -> _Outcome:
        if rs(params, n).r != 1:
            raise _Skip("requires r(n) = 1")
        shared = length_f(params, n - 2)
        f = self.words.f_symbols(params, n, cap)
        t = self.words.t_symbols(params, n, cap)
        outcome = _compare(f[len(f) - shared :], f[:shared], "f(n) with f(n)")
        if outcome.status is ReportStatus.FAIL:
            return outcome
        outcome = _compare(f[len(f) - shared :], t[:shared], "f(n) with t(n)")
        if outcome.status is ReportStatus.FAIL:
            return outcome
        return _compare(self._fft(params, n, cap), f + f[shared:] + t[shared:])

    def _check_f_squared(self, params: Params, n: int, cap: int) -> _Outcome:
        r = rs(params, n).r
        f = self.words.f_symbols(params, n, cap)
        f1 = self.words.f_symbols(params, n - 1, cap)
        t1 = self.words.t_symbols(params, n - 1, cap)
        right = f1 * r + self.words.overlap_I_symbols(params, n - 1, cap) + t1 * (r - 1)
        return _compare(f + f, right)

    def _check_lemma_r_even(self, params: Params, n: int, cap: int) -> _Outcome:
        self._require_case(params, n, DecompositionCase.R_EVEN)
        r, s = rs(params, n)
        f2 = self.words.f_symbols(params, n - 2, cap)
        t2 = self.words.t_symbols(params, n - 2, cap)
        group = f2 * s + self.words.overlap_I_symbols(params, n - 2, cap) + t2 * (s - 1)
        return _compare(self.words.f_symbols(params, n, cap), group * (r // 2) + f2)

    def _check_lemma_both_odd(self, params: Params, n: int, cap: int) -> _Outcome:
        self._require_case(params, n, DecompositionCase.BOTH_ODD)
        r, s = rs(params, n)
        square = self.words.f_symbols(params, n - 2, cap) * 2
        f3 = self.words.f_symbols(params, n - 3, cap)
        t3 = self.words.t_symbols(params, n - 3, cap)
        block = square * ((s + 1) // 2) + t3 + square * ((s - 1) // 2) + f3
        right = block * ((r - 1) // 2) + square * ((s + 1) // 2) + t3
        return _compare(self.words.f_symbols(params, n, cap), right)

    def _check_lemma_odd_even(self, params: Params, n: int, cap: int) -> _Outcome:
        self._require_case(params, n, DecompositionCase.ODD_EVEN)
        r, s = rs(params, n)
        square = self.words.f_symbols(params, n - 3, cap) * 2
        f4 = self.words.f_symbols(params, n - 4, cap)
        t4 = self.words.t_symbols(params, n - 4, cap)
        x_part = square * ((r + 1) // 2) + t4 + square * ((r - 1) // 2) + f4
        c_part = square * ((r + 1) // 2) + f4
        d_part = square * ((r + 1) // 2) + t4
        brace = x_part * (s // 2) + c_part + x_part * ((s - 2) // 2) + d_part
        right = brace * ((r - 1) // 2) + x_part * (s // 2) + c_part
        return _compare(self.words.f_symbols(params, n, cap), right)

    def _check_flattened(
        self, params: Params, n: int, cap: int, drop: int, compose_twice: bool = False
    ) -> _Outcome:
        structure = self.cells.decompose(
            params, n, expand=True, compose_twice=compose_twice
        )
        if structure.levels != {n - drop}:
            return _Outcome(
                ReportStatus.FAIL,
                f"cells at levels {sorted(structure.levels)}, expected only {n - drop}",
            )
        what = "composed structure" if compose_twice else ""
        flattened = self.cells.flatten(structure, cap).symbols
        return _compare(self.words.f_symbols(params, n, cap), flattened, what)

    def _check_table_row1(self, params: Params, n: int, cap: int) -> _Outcome:
        self._require_case(params, n, DecompositionCase.R_EVEN)
        return self._check_flattened(params, n, cap, 2)

    def _check_table_row2(self, params: Params, n: int, cap: int) -> _Outcome:
        self._require_case(params, n, DecompositionCase.BOTH_ODD)
        outcome = self._check_flattened(params, n, cap, 3)
        composed_minimum = identity_minimum_n(IdentityId.TABLE1_ROW2, params) + 3
        if outcome.status is ReportStatus.PASS and n >= composed_minimum:
            return self._check_flattened(params, n, cap, 6, compose_twice=True)
        return outcome

    def _check_table_row3(self, params: Params, n: int, cap: int) -> _Outcome:
        self._require_case(params, n, DecompositionCase.ODD_EVEN)
        return self._check_flattened(params, n, cap, 4)

    def _check_balanced(self, params: Params, n: int, cap: int) -> _Outcome:
        factor_length = self.settings.balance_factor_length
        if length_f(params, n) < factor_length:
            raise _Skip(f"L(n) below the factor length {factor_length}")
        if check_balanced(self.words.word_f(params, n, cap), factor_length):
            return _PASS
        return _Outcome(
            ReportStatus.FAIL, f"unbalanced factors of length <= {factor_length}"
        )

    def verify_identity(
        self, identity: IdentityId, params: Params, n: int, cap: Optional[int] = None
    ) -> VerificationReport:
        """Check one identity at one (a, b, n).

        Args:
            identity: Identity to check.
            params: Word family parameters.
            n: Level to instantiate the identity at.
            cap: Size cap for every word built (``max_word_length`` by default).

        Returns:
            A pass, fail or skipped-precondition report. Oversized words and
            unmet bounds are reported as skipped with the reason in ``detail``.
        """
        limit = self.settings.max_word_length if cap is None else cap
        started = time.perf_counter()
        minimum = identity_minimum_n(identity, params)
        try:
            if n < minimum:
                raise _Skip(f"n={n} below minimum n = {minimum}")
            outcome = getattr(self, self.CHECKS[identity])(params, n, limit)
        except _Skip as skip:
            outcome = _Outcome(ReportStatus.SKIPPED, str(skip))
        except WordTooLargeError as exc:
            outcome = _Outcome(ReportStatus.SKIPPED, str(exc))
        except (ConstructionMismatchError, StructureError) as exc:
            outcome = _Outcome(ReportStatus.FAIL, str(exc))
        except PreconditionError as exc:
            outcome = _Outcome(ReportStatus.SKIPPED, str(exc))

        report = VerificationReport(
            identity=identity,
            params=params,
            n=n,
            status=outcome.status,
            detail=outcome.detail,
            mismatch=outcome.mismatch,
            elapsed=time.perf_counter() - started,
        )
        if report.failed:
            logger.warning(
                "Identity failed",
                extra={
                    "identity": identity.value,
                    "a": params.a,
                    "b": params.b,
                    "n": n,
                    "detail": report.detail,
                },
            )
        return report

    def verify_grid(
        self,
        a_range: Iterable[int],
        b_range: Iterable[int],
        n_max: int,
        length_cap: Optional[int] = None,
        ids: Optional[Iterable[IdentityId]] = None,
        classical: bool = False,
        workers: Optional[int] = None,
    ) -> list[VerificationReport]:
        """Check identities at every (a, b, n) whose word fits the length cap.

        n runs from 0 to n_max per pair and stops at the first L(n) above the
        cap. Reports come back ordered by a, b, n and then identity, however
        many worker processes run them.

        Args:
            a_range: Values of a.
            b_range: Values of b.
            n_max: Largest level visited.
            length_cap: Largest L(n) visited (``default_length_cap`` by default).
            ids: Identities to check (all of them when None; none when empty).
            classical: Use the classical-swapped convention for the pair (1, 1).
            workers: Worker processes (``worker_concurrency`` by default).

        Raises:
            PreconditionError: If a range is empty, n_max is negative or the
                cap exceeds ``max_word_length``.
        """
        settings = self.settings
        cap = settings.default_length_cap if length_cap is None else length_cap
        if cap < 1 or cap > settings.max_word_length:
            raise PreconditionError(
                f"length cap {cap} must be between 1 and max_word_length "
                f"({settings.max_word_length})"
            )
        if n_max < 0:
            raise PreconditionError(f"n_max must be nonnegative, got {n_max}")
        a_values, b_values = list(a_range), list(b_range)
        if not a_values or not b_values:
            raise PreconditionError("a and b ranges must be nonempty")

        identities: Sequence[IdentityId] = sorted(
            set(IdentityId) if ids is None else set(ids), key=lambda item: item.rank
        )
        if not identities:
            return []

        tasks: list[_Task] = [
            (identity, params, n, cap)
            for params in grid_params(a_values, b_values, classical)
            for n in _grid_levels(params, n_max, cap)
            for identity in identities
        ]
        runner = GridRunner(settings.worker_concurrency if workers is None else workers)
        if runner.concurrency == 1:
            reports = [self.verify_identity(*task) for task in tasks]
        else:
            reports = runner.map(_run_task, tasks)

        failed = sum(1 for report in reports if report.failed)
        skipped = sum(1 for report in reports if report.status is ReportStatus.SKIPPED)
        logger.info(
            "Grid verification complete",
            extra={
                "reports": len(reports),
                "failed": failed,
                "skipped": skipped,
                "length_cap": cap,
            },
        )
        return reports


@lru_cache()
def get_verification_service() -> VerificationService:
    """Get the shared verification service."""
    return VerificationService(get_cell_service(), get_settings())


def _run_task(task: _Task) -> VerificationReport:
    return get_verification_service().verify_identity(*task)

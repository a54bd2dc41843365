"""Generation of the biperiodic Fibonacci words f, t, p and I.

Length arithmetic is exposed as plain functions since it never builds a word.
Materialized words are plain ``str`` values kept in per-service LRU caches;
the ``word_*`` methods wrap them in :class:`Word`. Every materializing call
checks the exact length against a size cap (``Settings.max_word_length``
unless one is passed) before building anything.
"""

import logging
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from fibwords.config import Settings, get_settings
from fibwords.exceptions import (
    ConstructionMismatchError,
    PreconditionError,
    UndefinedWordError,
    WordTooLargeError,
)
from fibwords.models.params import Params, ParityPair
from fibwords.models.word import Word

logger = logging.getLogger(__name__)

# Lengths past this are treated like an integer overflow.
LENGTH_LIMIT = 2**63 - 1

# Smallest n for which I(a,b,n) is defined.
I_MIN_LEVEL = 5


def rs(params: Params, n: int) -> ParityPair:
    """Return (r, s): r = a for even n and b for odd n; s is the other one."""
    if n % 2 == 0:
        return ParityPair(params.a, params.b)
    return ParityPair(params.b, params.a)


@lru_cache(maxsize=1024)
def lengths(params: Params, n: int) -> tuple[int, ...]:
    """Return (L0, ..., Ln) from the length recurrence without building words.

    Raises:
        PreconditionError: If n is negative.
        WordTooLargeError: If some length leaves the signed 64-bit range.
    """
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    first = 1 if params.is_classical else params.a
    values = [1, first]
    for k in range(2, n + 1):
        value = rs(params, k).r * values[k - 1] + values[k - 2]
        if value > LENGTH_LIMIT:
            raise WordTooLargeError(value, LENGTH_LIMIT)
        values.append(value)
    return tuple(values[: n + 1])


def length_f(params: Params, n: int) -> int:
    """Exact number of symbols of f(a,b,n)."""
    return lengths(params, n)[n]


def length_I(params: Params, n: int) -> int:
    """Exact number of symbols of I(a,b,n), that is L(n) + 2 L(n-1)."""
    if n < I_MIN_LEVEL:
        raise PreconditionError(f"I is defined for n >= {I_MIN_LEVEL}, got n={n}")
    table = lengths(params, n)
    return table[n] + 2 * table[n - 1]


def first_difference(left: str, right: str) -> Optional[int]:
    """Index of the first differing symbol, or None when the strings are equal.

    A proper prefix differs at the shorter string's length.
    """
    if left == right:
        return None
    shorter = min(len(left), len(right))
    if shorter == 0:
        return 0
    left_codes = np.frombuffer(left[:shorter].encode("ascii"), dtype=np.uint8)
    right_codes = np.frombuffer(right[:shorter].encode("ascii"), dtype=np.uint8)
    positions = np.flatnonzero(left_codes != right_codes)
    if positions.size:
        return int(positions[0])
    return shorter


class WordService:
    """Service building and caching the words of each (a, b) family.

    Attributes:
        settings: Application settings giving the size cap and cache size.
    """

    def __init__(self, settings: Optional[Settings] = None) -> None:
        """Initialize the word service.

        Args:
            settings: Application settings; the cached settings when omitted.
        """
        self.settings = settings or get_settings()
        cache = lru_cache(maxsize=self.settings.word_cache_size)
        self._f: Callable[[Params, int], str] = cache(self._build_f)
        self._t: Callable[[Params, int], str] = cache(self._build_t)
        self._I: Callable[[Params, int], str] = cache(self._build_I)

    def clear_cache(self) -> None:
        """Drop every word this service has materialized."""
        for cached in (self._f, self._t, self._I):
            cached.cache_clear()

    def ensure_fits(self, length: int, cap: Optional[int] = None) -> None:
        """Check a word length against the cap before anything is built.

        Raises:
            WordTooLargeError: If the length exceeds the cap.
        """
        limit = self.settings.max_word_length if cap is None else cap
        if length > limit:
            raise WordTooLargeError(length, limit)

    def _build_f(self, params: Params, n: int) -> str:
        if params.is_classical:
            previous, current = "1", "0"
        else:
            previous, current = "0", "0" * (params.a - 1) + "1"
        if n == 0:
            return previous
        for k in range(2, n + 1):
            previous, current = current, current * rs(params, k).r + previous
        logger.debug(
            "Generated word",
            extra={"kind": "f", "a": params.a, "b": params.b, "n": n, "length": len(current)},
        )
        return current

    def f_symbols(self, params: Params, n: int, cap: Optional[int] = None) -> str:
        """f(a,b,n) as a 0/1 string.

        Raises:
            PreconditionError: If n is negative.
            WordTooLargeError: If L(n) exceeds the cap.
        """
        self.ensure_fits(length_f(params, n), cap)
        return self._f(params, n)

    @staticmethod
    def _require_two_symbols(name: str, params: Params, n: int) -> None:
        if length_f(params, n) < 2:
            raise UndefinedWordError(name, params.a, params.b, n)

    def _build_t(self, params: Params, n: int) -> str:
        f = self._f(params, n)
        return f[:-2] + f[-1] + f[-2]

    def t_symbols(self, params: Params, n: int, cap: Optional[int] = None) -> str:
        """t(a,b,n) as a 0/1 string: f with its final two symbols swapped."""
        self._require_two_symbols("t", params, n)
        self.ensure_fits(length_f(params, n), cap)
        return self._t(params, n)

    def overlap_I_symbols(self, params: Params, n: int, cap: Optional[int] = None) -> str:
        """I(a,b,n) assembled from its overlap definition.

        When r(n) >= 2 the word starts as f(n) and ends as t(n), the two
        sharing f(n-1)^(r-2) f(n-2). When r(n) = 1 it is f(n), f(n), t(n) with
        every adjacent pair sharing a copy of f(n-2).

        Raises:
            PreconditionError: If n < 5.
            ConstructionMismatchError: If an overlap region disagrees.
        """
        total = length_I(params, n)
        self.ensure_fits(total, cap)
        table = lengths(params, n)
        f = self.f_symbols(params, n, cap)
        t = self.t_symbols(params, n, cap)
        r = rs(params, n).r
        if r >= 2:
            shared = (r - 2) * table[n - 1] + table[n - 2]
            if f[len(f) - shared :] != t[:shared]:
                raise ConstructionMismatchError(
                    f"f{params}[{n}] does not end the way t{params}[{n}] begins "
                    f"over {shared} symbols"
                )
            built = f + t[shared:]
        else:
            shared = table[n - 2]
            if f[len(f) - shared :] != f[:shared] or f[len(f) - shared :] != t[:shared]:
                raise ConstructionMismatchError(
                    f"adjacent copies in I{params}[{n}] disagree on their shared "
                    f"{shared} symbols"
                )
            built = f + f[shared:] + t[shared:]
        if len(built) != total:
            raise ConstructionMismatchError(
                f"I{params}[{n}] has {len(built)} symbols, expected {total}"
            )
        return built

    def _build_I(self, params: Params, n: int) -> str:
        built = self.overlap_I_symbols(params, n, LENGTH_LIMIT)
        f_prev = self._f(params, n - 1)
        expected = f_prev + f_prev + self._t(params, n)
        position = first_difference(built, expected)
        if position is not None:
            raise ConstructionMismatchError(
                f"I{params}[{n}] differs from f(n-1)^2 t(n) at position {position}",
                position=position,
            )
        logger.debug(
            "Generated word",
            extra={"kind": "I", "a": params.a, "b": params.b, "n": n, "length": len(built)},
        )
        return built

    def i_symbols(self, params: Params, n: int, cap: Optional[int] = None) -> str:
        """I(a,b,n) as a 0/1 string, cross-checked against f(n-1)^2 t(n)."""
        self.ensure_fits(length_I(params, n), cap)
        return self._I(params, n)

    def word_f(self, params: Params, n: int, cap: Optional[int] = None) -> Word:
        """The biperiodic Fibonacci word f(a,b,n)."""
        return Word(self.f_symbols(params, n, cap))

    def word_t(self, params: Params, n: int, cap: Optional[int] = None) -> Word:
        """f(a,b,n) with its last two symbols interchanged.

        Raises:
            UndefinedWordError: If f(a,b,n) has fewer than two symbols.
        """
        return Word(self.t_symbols(params, n, cap))

    def palindromic_prefix(self, params: Params, n: int, cap: Optional[int] = None) -> Word:
        """f(a,b,n) without its last two symbols; a palindrome for n >= 3.

        Raises:
            UndefinedWordError: If f(a,b,n) has fewer than two symbols.
        """
        self._require_two_symbols("p", params, n)
        return Word(self.f_symbols(params, n, cap)[:-2])

    def last_two(self, params: Params, n: int, cap: Optional[int] = None) -> Word:
        """The final two symbols of f(a,b,n) as actually generated.

        Raises:
            PreconditionError: If n < 3.
            UndefinedWordError: If f(a,b,n) has fewer than two symbols.
        """
        if n < 3:
            raise PreconditionError(f"last_two is defined for n >= 3, got n={n}")
        self._require_two_symbols("t", params, n)
        return Word(self.f_symbols(params, n, cap)[-2:])

    def word_I(self, params: Params, n: int, cap: Optional[int] = None) -> Word:
        """The overlapping word I(a,b,n) (n >= 5).

        Built from the overlap definition (the r = 1 variant when r(n) = 1)
        and checked symbol for symbol against f(n-1) f(n-1) t(n).

        Raises:
            PreconditionError: If n < 5.
            WordTooLargeError: If L(n) + 2 L(n-1) exceeds the cap.
            ConstructionMismatchError: If the two constructions disagree.
        """
        return Word(self.i_symbols(params, n, cap))


@lru_cache()
def get_word_service() -> WordService:
    """Get the shared word service built from the current settings."""
    return WordService(get_settings())

"""Unit tests for word generation."""

import pytest

from fibwords.config import get_settings
from fibwords.exceptions import (
    PreconditionError,
    UndefinedWordError,
    WordTooLargeError,
)
from fibwords.models.params import Params
from fibwords.models.word import Word
from fibwords.services.word_service import (
    WordService,
    first_difference,
    get_word_service,
    length_f,
    length_I,
    lengths,
    rs,
)


class TestLengths:
    """Tests for the length recurrence."""

    @pytest.mark.parametrize(
        "a, b, expected",
        [
            (2, 3, (1, 2, 5, 17, 39, 134, 307, 1055, 2417)),
            (2, 2, (1, 2, 5, 12, 29, 70, 169, 408, 985)),
            (3, 3, (1, 3, 10, 33, 109, 360, 1189, 3927, 12970)),
            (3, 2, (1, 3, 10, 23, 79, 181, 622, 1425, 4897)),
            (1, 2, (1, 1, 2, 5, 7, 19, 26, 71, 97)),
        ],
    )
    def test_standard_lengths(self, a, b, expected):
        """L0 = 1, L1 = a, then L(n) = r(n) L(n-1) + L(n-2)."""
        assert lengths(Params(a, b), 8) == expected

    def test_classical_lengths(self, classical):
        """The classical convention gives the Fibonacci numbers."""
        assert lengths(classical, 12) == (1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233)

    def test_negative_n(self, params_2_3):
        """Negative levels are rejected."""
        with pytest.raises(PreconditionError):
            lengths(params_2_3, -1)

    def test_overflow_reported_as_too_large(self):
        """Lengths past the signed 64-bit range raise WordTooLargeError."""
        with pytest.raises(WordTooLargeError):
            lengths(Params(6, 6), 200)

    def test_length_I(self, params_2_3, classical):
        """|I(n)| = L(n) + 2 L(n-1)."""
        assert length_I(params_2_3, 5) == 212
        assert length_I(classical, 6) == 29

    def test_length_I_below_minimum(self, params_2_3):
        """I is undefined below level 5."""
        with pytest.raises(PreconditionError):
            length_I(params_2_3, 4)


class TestRs:
    """Tests for the (r, s) selection."""

    def test_parity(self, params_2_3):
        """Even n uses (a, b); odd n uses (b, a)."""
        assert rs(params_2_3, 4) == (2, 3)
        assert rs(params_2_3, 5) == (3, 2)


class TestWords:
    """Tests for f, t, p and the final two symbols."""

    @pytest.mark.parametrize(
        "n, expected", [(0, "0"), (1, "01"), (2, "01010"), (3, "01010010100101001")]
    )
    def test_f_2_3(self, words, params_2_3, n, expected):
        """f(2,3,n) for the first levels."""
        assert words.word_f(params_2_3, n) == Word(expected)

    @pytest.mark.parametrize(
        "n, expected",
        [(0, "1"), (1, "0"), (3, "010"), (4, "01001"), (5, "01001010"), (6, "0100101001001")],
    )
    def test_f_classical(self, words, classical, n, expected):
        """The classical convention starts from f0 = 1, f1 = 0."""
        assert words.word_f(classical, n).symbols == expected

    def test_length_matches_recurrence(self, words, params_2_3):
        """Generated words have exactly L(n) symbols."""
        for n in range(9):
            assert len(words.word_f(params_2_3, n)) == length_f(params_2_3, n)

    def test_t_swaps_last_two(self, words, params_2_3):
        """t(n) is f(n) with the last two symbols interchanged."""
        assert words.word_t(params_2_3, 2).symbols == "01001"
        assert words.word_t(params_2_3, 3).symbols == "01010010100101010"

    def test_t_undefined_for_single_symbol(self, words):
        """t needs at least two symbols."""
        with pytest.raises(UndefinedWordError) as exc_info:
            words.word_t(Params(1, 3), 1)

        assert exc_info.value.name == "t"

    def test_palindromic_prefix(self, words, params_2_3):
        """p(n) drops the last two symbols and reads the same reversed."""
        p = words.palindromic_prefix(params_2_3, 3)

        assert p.symbols == "010100101001010"
        assert p.is_palindrome()

    @pytest.mark.parametrize("n, expected", [(3, "01"), (4, "10"), (5, "01")])
    def test_last_two_alternates(self, words, params_2_3, n, expected):
        """The final pair flips between 01 and 10 from level to level."""
        assert words.last_two(params_2_3, n).symbols == expected

    def test_last_two_requires_n3(self, words, params_2_3):
        """last_two is only defined from level 3."""
        with pytest.raises(PreconditionError):
            words.last_two(params_2_3, 2)

    def test_cap_checked_before_building(self, params_2_3, mocker):
        """An oversized request fails without generating anything."""
        builder = mocker.patch.object(WordService, "_build_f")
        words = WordService()

        with pytest.raises(WordTooLargeError) as exc_info:
            words.word_f(params_2_3, 8, cap=1000)

        assert exc_info.value.length == 2417
        assert exc_info.value.cap == 1000
        builder.assert_not_called()

    def test_default_cap_from_settings(self, small_cap, words, params_2_3):
        """Without an explicit cap the configured maximum applies."""
        assert len(words.word_f(params_2_3, 6)) == 307
        with pytest.raises(WordTooLargeError):
            words.word_f(params_2_3, 8)


class TestWordI:
    """Tests for the overlapping word I."""

    def test_I_2_3_5(self, words, params_2_3):
        """I(2,3,5) has 212 symbols, starts with f(5) and ends with t(5)."""
        word = words.word_I(params_2_3, 5)

        assert len(word) == 212
        assert word.prefix(134) == words.word_f(params_2_3, 5)
        assert word.suffix(134) == words.word_t(params_2_3, 5)

    def test_I_equals_fft(self, words, params_2_3):
        """I(n) = f(n-1) f(n-1) t(n)."""
        f_prev = words.word_f(params_2_3, 5)

        expected = f_prev + f_prev + words.word_t(params_2_3, 6)

        assert words.word_I(params_2_3, 6) == expected

    def test_r1_variant(self, words, classical):
        """With r = 1 the I word is f, f, t overlapping by f(n-2)."""
        word = words.word_I(classical, 6)
        f_prev = words.word_f(classical, 5)

        assert len(word) == 29
        assert word == f_prev + f_prev + words.word_t(classical, 6)
        assert words.overlap_I_symbols(classical, 6) == word.symbols

    def test_I_below_minimum(self, words, params_2_3):
        """I(n) needs n >= 5."""
        with pytest.raises(PreconditionError):
            words.word_I(params_2_3, 4)


class TestFirstDifference:
    """Tests for first_difference."""

    def test_equal(self):
        """Equal strings have no difference."""
        assert first_difference("0101", "0101") is None

    def test_index(self):
        """The first differing index is returned."""
        assert first_difference("0101", "0111") == 2

    def test_prefix(self):
        """A proper prefix differs at its own length."""
        assert first_difference("01", "010") == 2

    def test_far_into_long_strings(self):
        """A single flipped symbol deep in a long string is located."""
        left = "0" * 10_000
        right = left[:9000] + "1" + left[9001:]

        assert first_difference(left, right) == 9000

    def test_empty_against_nonempty(self):
        """The empty string differs from any other at position 0."""
        assert first_difference("", "0") == 0
        assert first_difference("1", "") == 0

    def test_only_common_prefix_compared(self):
        """A longer string that agrees on the shared part differs at the end."""
        assert first_difference("0110" * 3000, "0110" * 3000 + "1") == 12000


class TestWordService:
    """Tests for the service object and its caches."""

    def test_accessor_is_shared(self):
        """get_word_service returns one instance until the caches are reset."""
        assert get_word_service() is get_word_service()

    def test_cache_size_from_settings(self, monkeypatch, params_2_3):
        """Each word cache holds word_cache_size entries."""
        monkeypatch.setenv("FIBWORDS_WORD_CACHE_SIZE", "2")
        get_settings.cache_clear()
        words = WordService()

        for n in range(5):
            words.word_f(params_2_3, n)

        assert words._f.cache_info().currsize == 2

    def test_clear_cache(self, words, params_2_3):
        """clear_cache drops every materialized word."""
        words.word_I(params_2_3, 5)
        words.clear_cache()

        assert words._I.cache_info().currsize == 0
        assert words._f.cache_info().currsize == 0

    def test_ensure_fits(self, words):
        """ensure_fits accepts the cap itself and rejects one past it."""
        words.ensure_fits(100, cap=100)

        with pytest.raises(WordTooLargeError, match="101 symbols"):
            words.ensure_fits(101, cap=100)

    def test_undefined_word_is_precondition(self, words):
        """An undefined t can be caught as a precondition miss."""
        with pytest.raises(PreconditionError):
            words.word_t(Params(1, 3), 1)

"""Unit tests for identity verification."""

import logging

import pytest

from fibwords.exceptions import PreconditionError, UndefinedWordError
from fibwords.models.params import Params
from fibwords.models.report import IdentityId, Mismatch, ReportStatus
from fibwords.models.word import Word
from fibwords.services import verification_service
from fibwords.services.cell_service import CellService
from fibwords.services.verification_service import (
    IDENTITY_STATEMENTS,
    VerificationService,
    check_balanced,
    get_verification_service,
    grid_params,
    identity_minimum_n,
)
from fibwords.services.word_service import WordService
from fibwords.workers.grid import GridRunner


class TestIdentityMinimum:
    """Tests for per-identity minimum levels."""

    @pytest.mark.parametrize(
        "identity, expected",
        [
            (IdentityId.SUFFIX_PARITY, 3),
            (IdentityId.SWAP_FT, 5),
            (IdentityId.F_SQUARED, 6),
            (IdentityId.TABLE1_ROW3, 9),
            (IdentityId.BALANCED, 0),
        ],
    )
    def test_base(self, identity, expected):
        """Minimums for a, b >= 2."""
        assert identity_minimum_n(identity, Params(2, 3)) == expected

    def test_unit_parameter_shift(self):
        """A unit parameter moves most minimums up by one."""
        params = Params(1, 4)

        assert identity_minimum_n(IdentityId.SWAP_FF, params) == 6
        assert identity_minimum_n(IdentityId.LEMMA_BOTH_ODD, params) == 9
        assert identity_minimum_n(IdentityId.PALINDROME, params) == 3
        assert identity_minimum_n(IdentityId.BALANCED, params) == 0


class TestCheckBalanced:
    """Tests for the balance check."""

    def test_balanced_word(self):
        """Classical f(5) is balanced."""
        assert check_balanced(Word("01001010"), 4)

    def test_unbalanced_word(self):
        """0011 has length-2 factors with 0 and 2 ones."""
        assert not check_balanced(Word("0011"), 2)

    def test_factor_length_too_long(self):
        """Factors cannot be longer than the word."""
        with pytest.raises(PreconditionError):
            check_balanced(Word("01"), 3)

    def test_biperiodic_word(self, words, params_2_3):
        """Words of the (2,3) family are balanced for short factors."""
        assert check_balanced(words.word_f(params_2_3, 7), 64)


class TestVerifyIdentity:
    """Tests for single identity checks."""

    @pytest.mark.parametrize("identity", list(IdentityId))
    def test_all_pass_or_skip(self, verifier, identity):
        """No identity fails for (2,3) and (3,3) at small levels."""
        for params in (Params(2, 3), Params(3, 3), Params.classical()):
            for n in range(0, 11):
                report = verifier.verify_identity(identity, params, n)
                assert not report.failed, report.detail

    def test_pass(self, verifier, params_2_3):
        """SWAP_FT holds at (2,3,5)."""
        report = verifier.verify_identity(IdentityId.SWAP_FT, params_2_3, 5)

        assert report.status is ReportStatus.PASS
        assert report.mismatch is None
        assert report.elapsed >= 0

    def test_below_minimum_skipped(self, verifier):
        """(3,2,8) is below the odd-even minimum."""
        report = verifier.verify_identity(IdentityId.LEMMA_ODD_EVEN, Params(3, 2), 8)

        assert report.status is ReportStatus.SKIPPED
        assert "minimum n = 9" in report.detail

    def test_wrong_case_skipped(self, verifier):
        """A row is skipped outside its parity case."""
        report = verifier.verify_identity(IdentityId.TABLE1_ROW1, Params(3, 3), 8)

        assert report.status is ReportStatus.SKIPPED
        assert "r-even" in report.detail

    def test_r1_variant_skipped_when_r_is_large(self, verifier, params_2_3):
        """The r = 1 variant does not apply to (2,3)."""
        report = verifier.verify_identity(IdentityId.I_VARIANT_R1, params_2_3, 6)

        assert report.status is ReportStatus.SKIPPED

    def test_r1_variant_classical(self, verifier, classical):
        """The r = 1 variant holds for classical words."""
        report = verifier.verify_identity(IdentityId.I_VARIANT_R1, classical, 8)

        assert report.status is ReportStatus.PASS

    def test_oversized_skipped(self, verifier, params_2_3):
        """Words over the cap are skipped, not failed."""
        report = verifier.verify_identity(IdentityId.F_SQUARED, params_2_3, 8, cap=1000)

        assert report.status is ReportStatus.SKIPPED
        assert "word too large" in report.detail

    def test_suffix_direction_annotated(self, verifier, params_2_3):
        """The observed suffix is reported against the stated direction."""
        report = verifier.verify_identity(IdentityId.SUFFIX_PARITY, params_2_3, 3)

        assert report.status is ReportStatus.PASS
        assert "observed suffix 01" in report.detail
        assert "opposite" in report.detail

    def test_failure_reports_first_mismatch(self, verifier, params_2_3, mocker, caplog):
        """A broken right side fails with the first differing position."""
        mocker.patch.object(verifier.words, "t_symbols", side_effect=verifier.words.f_symbols)

        with caplog.at_level(logging.WARNING, logger=verification_service.__name__):
            report = verifier.verify_identity(IdentityId.SWAP_FT, params_2_3, 5)

        assert report.failed
        assert report.mismatch == Mismatch(54, "0", "1")
        assert "position 54" in report.detail
        assert any(record.getMessage() == "Identity failed" for record in caplog.records)

    def test_undefined_word_skipped(self, verifier, params_2_3, mocker):
        """A t or p that cannot be formed is a skip, never a crash."""
        mocker.patch.object(
            verifier, "_check_swap_ft", side_effect=UndefinedWordError("t", 2, 3, 5)
        )

        report = verifier.verify_identity(IdentityId.SWAP_FT, params_2_3, 5)

        assert report.status is ReportStatus.SKIPPED
        assert "t undefined" in report.detail

    def test_palindrome_checked_against_reverse(self, verifier, params_2_3, mocker):
        """The palindrome identity compares p with its reversal."""
        reverse = mocker.spy(Word, "reverse")

        report = verifier.verify_identity(IdentityId.PALINDROME, params_2_3, 4)

        assert report.status is ReportStatus.PASS
        reverse.assert_called_once()

    def test_balance_factor_length_from_settings(self, params_2_3, settings):
        """Words shorter than the configured factor length are skipped."""
        narrow = settings.model_copy(update={"balance_factor_length": 500})
        verifier = VerificationService(settings=narrow)

        report = verifier.verify_identity(IdentityId.BALANCED, params_2_3, 6)

        assert report.status is ReportStatus.SKIPPED
        assert "factor length 500" in report.detail


class TestVerifyGrid:
    """Tests for grid sweeps."""

    def test_levels_and_order(self, verifier):
        """Reports cover n = 0..n_max in (a, b, n, identity) order."""
        reports = verifier.verify_grid(
            [2], [3], 6, ids=[IdentityId.SWAP_FT, IdentityId.PALINDROME]
        )

        assert [(report.n, report.identity) for report in reports][:2] == [
            (0, IdentityId.PALINDROME),
            (0, IdentityId.SWAP_FT),
        ]
        assert len(reports) == 14
        assert sorted(reports, key=lambda report: report.sort_key) == reports
        assert all(not report.failed for report in reports)

    def test_length_cap_stops_levels(self, verifier):
        """Levels stop at the first L(n) above the cap."""
        reports = verifier.verify_grid([2], [3], 30, length_cap=1000, ids=[IdentityId.PALINDROME])

        assert [report.n for report in reports] == list(range(7))

    def test_empty_ids(self, verifier):
        """An empty identity set gives no reports."""
        assert verifier.verify_grid([2], [3], 6, ids=[]) == []

    def test_cap_above_global_rejected(self, verifier, settings):
        """The grid cap may not exceed max_word_length."""
        with pytest.raises(PreconditionError):
            verifier.verify_grid([2], [3], 6, length_cap=settings.max_word_length + 1)

    def test_negative_n_max(self, verifier):
        """n_max must be nonnegative."""
        with pytest.raises(PreconditionError):
            verifier.verify_grid([2], [3], -1)

    def test_empty_range(self, verifier):
        """Both ranges must contain a value."""
        with pytest.raises(PreconditionError):
            verifier.verify_grid([], [3], 5)

    def test_summary_logged(self, verifier, caplog):
        """A summary is logged at info level."""
        with caplog.at_level(logging.INFO, logger=verification_service.__name__):
            verifier.verify_grid([2], [2], 3, ids=[IdentityId.PALINDROME])

        assert any(
            record.getMessage() == "Grid verification complete" for record in caplog.records
        )

    def test_worker_pool_matches_serial(self, verifier, mocker):
        """With several workers each task goes through the shared service."""
        pool_map = mocker.patch.object(
            GridRunner, "map", side_effect=lambda fn, tasks: [fn(task) for task in tasks]
        )
        ids = [IdentityId.SWAP_FF, IdentityId.EXCHANGE]

        pooled = verifier.verify_grid([2], [3], 7, ids=ids, workers=2)
        serial = verifier.verify_grid([2], [3], 7, ids=ids, workers=1)

        pool_map.assert_called_once()
        assert [report.sort_key for report in pooled] == [
            report.sort_key for report in serial
        ]
        assert [report.status for report in pooled] == [report.status for report in serial]


class TestGridParams:
    """Tests for grid parameter expansion."""

    def test_order(self):
        """Pairs run over b inside a."""
        assert grid_params([1, 2], [3, 4]) == [
            Params(1, 3), Params(1, 4), Params(2, 3), Params(2, 4),
        ]

    def test_classical_only_affects_unit_pair(self):
        """The classical flag swaps the convention for (1, 1) alone."""
        params = grid_params([1, 2], [1], classical=True)

        assert params == [Params.classical(), Params(2, 1)]


class TestVerificationService:
    """Tests for the service object and its tables."""

    def test_accessor_shares_cells_and_words(self):
        """The shared verifier uses the shared cell and word services."""
        verifier = get_verification_service()

        assert verifier is get_verification_service()
        assert verifier.words is verifier.cells.words

    def test_every_identity_has_a_check_and_statement(self):
        """Each identity maps to a check method and a printed statement."""
        for identity in IdentityId:
            assert callable(getattr(VerificationService, VerificationService.CHECKS[identity]))
            assert IDENTITY_STATEMENTS[identity]

    def test_own_word_service(self, params_2_3):
        """A verifier can run on a word service of its own."""
        words = WordService()
        verifier = VerificationService(CellService(words))

        report = verifier.verify_identity(IdentityId.TABLE1_ROW1, params_2_3, 8)

        assert report.status is ReportStatus.PASS
        assert verifier.words is words

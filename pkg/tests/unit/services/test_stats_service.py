"""Unit tests for family statistics."""

import pytest

from fibwords.exceptions import PreconditionError
from fibwords.models.cell import DecompositionCase
from fibwords.models.params import Params
from fibwords.services.cell_service import CellService, get_cell_service
from fibwords.services.stats_service import StatsService, get_stats_service


class TestLevelTable:
    """Tests for level_table."""

    def test_rows(self, stats, params_2_3):
        """Each row carries L(n), r, s and the routed case."""
        table = stats.level_table(params_2_3, 9)

        assert [row.length for row in table][-3:] == [1055, 2417, 8306]
        assert (table[8].r, table[8].s) == (2, 3)
        assert table[8].case is DecompositionCase.R_EVEN
        assert table[9].case is DecompositionCase.ODD_EVEN


class TestRowCounts:
    """Tests for row_counts."""

    def test_mixed_parity_family(self, stats, params_2_3):
        """(2,3) uses the r-even and odd-even rows."""
        rows = stats.row_counts(params_2_3)

        assert [(row.case, row.n, row.level) for row in rows] == [
            (DecompositionCase.R_EVEN, 8, 6),
            (DecompositionCase.ODD_EVEN, 9, 5),
        ]
        assert [(row.cells, row.expanded_cells) for row in rows] == [(7, 8), (55, 67)]

    def test_even_family(self, stats):
        """(2,2) only needs the r-even row: r s + 1 cells."""
        rows = stats.row_counts(Params(2, 2))

        assert len(rows) == 1
        assert (rows[0].n, rows[0].cells, rows[0].expanded_cells) == (7, 5, 6)

    def test_odd_family(self, stats):
        """(3,3) only needs the both-odd row."""
        rows = stats.row_counts(Params(3, 3))

        assert [(row.case, row.n, row.cells) for row in rows] == [
            (DecompositionCase.BOTH_ODD, 8, 33)
        ]


class TestFamilyStats:
    """Tests for family_stats."""

    def test_collects_everything(self, stats, params_2_3):
        """Period, levels and rows come together."""
        summary = stats.family_stats(params_2_3, n_max=5)

        assert summary.period == 4
        assert len(summary.levels) == 6
        assert len(summary.rows) == 2

    def test_negative_n_max(self, stats, params_2_3):
        """n_max must be nonnegative."""
        with pytest.raises(PreconditionError):
            stats.family_stats(params_2_3, n_max=-1)


class TestStatsService:
    """Tests for the service object."""

    def test_accessor_shares_cell_service(self):
        """The shared stats service counts cells with the shared cell service."""
        assert get_stats_service() is get_stats_service()
        assert get_stats_service().cells is get_cell_service()

    def test_counts_come_from_cell_service(self, params_2_3, mocker):
        """row_counts decomposes through the cell service it was given."""
        cells = CellService()
        decompose = mocker.spy(cells, "decompose")

        rows = StatsService(cells).row_counts(params_2_3)

        assert [call.args[1] for call in decompose.call_args_list] == [row.n for row in rows]

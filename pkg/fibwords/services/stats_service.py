"""Length tables and decomposition cell counts."""

import logging
from functools import lru_cache
from typing import Optional

from fibwords.exceptions import PreconditionError
from fibwords.models.cell import DecompositionCase
from fibwords.models.params import Params
from fibwords.models.stats import FamilyStats, LevelStats, RowCount
from fibwords.services.cell_service import CellService, get_cell_service
from fibwords.services.word_service import lengths, rs

logger = logging.getLogger(__name__)


class StatsService:
    """Service summarizing a word family for the ``stats`` command.

    Attributes:
        cells: Cell service used to classify levels and count cells.
    """

    def __init__(self, cells: Optional[CellService] = None) -> None:
        self.cells = cells or get_cell_service()

    def level_table(self, params: Params, n_max: int) -> list[LevelStats]:
        """L(n), r(n), s(n) and the decomposition case for n = 0..n_max."""
        table = lengths(params, n_max)
        rows = []
        for n in range(n_max + 1):
            r, s = rs(params, n)
            rows.append(
                LevelStats(
                    n=n, length=table[n], r=r, s=s, case=self.cells.classify(params, n)
                )
            )
        return rows

    def row_counts(self, params: Params) -> list[RowCount]:
        """Cell counts of each decomposition row the family uses.

        Each row is measured at the smallest n that routes to it and meets its
        minimum. n and n+1 cover both parities, so at most two rows appear.
        """
        cells = self.cells
        counts: dict[DecompositionCase, RowCount] = {}
        start = min(cells.minimum_n(params, case) for case in DecompositionCase)
        for n in range(start, start + 4):
            case = cells.classify(params, n)
            if case in counts or n < cells.minimum_n(params, case):
                continue
            structure = cells.decompose(params, n)
            counts[case] = RowCount(
                case=case,
                n=n,
                level=min(structure.levels),
                cells=len(structure),
                expanded_cells=len(cells.expand_all_I(structure)),
            )
        order = list(DecompositionCase)
        return sorted(counts.values(), key=lambda row: order.index(row.case))

    def family_stats(self, params: Params, n_max: int = 10) -> FamilyStats:
        """Everything the ``stats`` command prints for one (a, b).

        Raises:
            PreconditionError: If n_max is negative.
        """
        if n_max < 0:
            raise PreconditionError(f"n_max must be nonnegative, got {n_max}")
        stats = FamilyStats(
            params=params,
            period=self.cells.period_l(params),
            levels=self.level_table(params, n_max),
            rows=self.row_counts(params),
        )
        logger.debug(
            "Computed family stats",
            extra={"a": params.a, "b": params.b, "n_max": n_max, "rows": len(stats.rows)},
        )
        return stats


@lru_cache()
def get_stats_service() -> StatsService:
    """Get the shared stats service."""
    return StatsService(get_cell_service())

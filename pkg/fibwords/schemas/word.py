"""Generated word and family statistics records."""

from typing import Literal, Optional

from pydantic import BaseModel

from fibwords.models.cell import DecompositionCase
from fibwords.models.params import Convention
from fibwords.models.stats import FamilyStats

WordName = Literal["f", "t", "p", "I"]


class WordRecord(BaseModel):
    """Output of ``gen``; ``symbols`` is omitted for length-only requests."""

    a: int
    b: int
    n: int
    convention: Convention
    word: WordName
    length: int
    symbols: Optional[str] = None


class LevelRecord(BaseModel):
    n: int
    length: int
    r: int
    s: int
    case: DecompositionCase

    model_config = {"from_attributes": True}


class RowCountRecord(BaseModel):
    case: DecompositionCase
    n: int
    level: int
    cells: int
    expanded_cells: int

    model_config = {"from_attributes": True}


class StatsRecord(BaseModel):
    """Output of ``stats`` for one (a, b)."""

    a: int
    b: int
    convention: Convention
    period: int
    levels: list[LevelRecord]
    rows: list[RowCountRecord]

    @classmethod
    def from_stats(cls, stats: FamilyStats) -> "StatsRecord":
        return cls(
            a=stats.params.a,
            b=stats.params.b,
            convention=stats.params.convention,
            period=stats.period,
            levels=[LevelRecord.model_validate(level) for level in stats.levels],
            rows=[RowCountRecord.model_validate(row) for row in stats.rows],
        )

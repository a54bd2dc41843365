"""Pydantic records for structured output and CLI configuration."""

from fibwords.schemas.cli import CliConfig
from fibwords.schemas.report import GridSummaryRecord, ReportRecord
from fibwords.schemas.structure import CellRecord, CellStructureRecord
from fibwords.schemas.word import LevelRecord, RowCountRecord, StatsRecord, WordRecord

__all__ = [
    "CellRecord",
    "CellStructureRecord",
    "CliConfig",
    "GridSummaryRecord",
    "LevelRecord",
    "ReportRecord",
    "RowCountRecord",
    "StatsRecord",
    "WordRecord",
]

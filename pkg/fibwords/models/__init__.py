"""Domain value types."""

from fibwords.models.cell import Cell, CellKind, CellStructure, DecompositionCase
from fibwords.models.params import Convention, Params, ParityPair
from fibwords.models.report import (
    IdentityId,
    Mismatch,
    ReportStatus,
    VerificationReport,
)
from fibwords.models.stats import FamilyStats, LevelStats, RowCount
from fibwords.models.word import Word

__all__ = [
    "Cell",
    "CellKind",
    "CellStructure",
    "Convention",
    "DecompositionCase",
    "FamilyStats",
    "IdentityId",
    "LevelStats",
    "Mismatch",
    "Params",
    "ParityPair",
    "ReportStatus",
    "RowCount",
    "VerificationReport",
    "Word",
]

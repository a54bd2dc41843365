"""Summary tables of a word family."""

from dataclasses import dataclass, field

from fibwords.models.cell import DecompositionCase
from fibwords.models.params import Params


@dataclass(frozen=True)
class LevelStats:
    """Length and routing of f(a,b,n) at one level."""

    n: int
    length: int
    r: int
    s: int
    case: DecompositionCase


@dataclass(frozen=True)
class RowCount:
    """Cell counts of one decomposition row at its smallest valid n.

    Attributes:
        case: Decomposition row.
        n: Smallest level the row is used at for these parameters.
        level: Level of the cells.
        cells: Top-level cells with I-cells kept composite.
        expanded_cells: Cells after every I-cell is expanded.
    """

    case: DecompositionCase
    n: int
    level: int
    cells: int
    expanded_cells: int


@dataclass(frozen=True)
class FamilyStats:
    """Length table, period and row cell counts for one (a, b)."""

    params: Params
    period: int
    levels: list[LevelStats] = field(default_factory=list)
    rows: list[RowCount] = field(default_factory=list)

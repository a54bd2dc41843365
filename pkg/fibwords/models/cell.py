"""Positioned cells and the overlapping cell structures they form."""

from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import islice
from typing import Iterator

from fibwords.models.params import Params


class CellKind(str, Enum):
    """Kinds of words a cell can hold."""

    F = "F"
    T = "T"
    I = "I"  # noqa: E741

    def toggled(self) -> "CellKind":
        """Swap F and T; I is left alone."""
        if self is CellKind.F:
            return CellKind.T
        if self is CellKind.T:
            return CellKind.F
        return self


class DecompositionCase(str, Enum):
    """The three parity cases the eight (a, b, n) parity choices reduce to."""

    R_EVEN = "r-even"
    BOTH_ODD = "both-odd"
    ODD_EVEN = "r-odd-s-even"


@dataclass(frozen=True, slots=True)
class Cell:
    """One copy of an f-, t- or I-word placed inside a parent word.

    Attributes:
        kind: Which word the cell copies.
        level: The n' of the copied word.
        offset: Index of the cell's first symbol in the parent word.
        length: Number of symbols of the copied word.
    """

    kind: CellKind
    level: int
    offset: int
    length: int

    @property
    def end(self) -> int:
        """Index one past the cell's last symbol."""
        return self.offset + self.length

    def shifted(self, delta: int) -> "Cell":
        return replace(self, offset=self.offset + delta)

    def with_kind(self, kind: CellKind) -> "Cell":
        return replace(self, kind=kind)


@dataclass(frozen=True)
class CellStructure:
    """An ordered, possibly overlapping list of cells that tiles a parent word.

    The parent is f(a,b,root_level), or f(a,b,root_level) squared for the
    structures built from f^2.

    Attributes:
        params: Word family parameters.
        root_level: Level n of the parent word.
        parent_length: Number of symbols of the parent word.
        period: Level drop between the parent and its cells per round.
        self_similar: Whether the pattern repeats at the cells' level.
        cells: Cells sorted by offset.
    """

    params: Params
    root_level: int
    parent_length: int
    period: int
    self_similar: bool
    cells: tuple[Cell, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        cells = tuple(self.cells)
        object.__setattr__(self, "cells", cells)
        previous = 0
        for index, cell in enumerate(cells):
            if cell.offset < previous:
                raise ValueError(
                    f"cell {index} at offset {cell.offset} precedes offset {previous}"
                )
            if cell.offset < 0 or cell.length <= 0 or cell.end > self.parent_length:
                raise ValueError(
                    f"cell {index} [{cell.offset}, {cell.end}) does not fit in a "
                    f"parent of length {self.parent_length}"
                )
            previous = cell.offset

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    @property
    def kinds(self) -> list[CellKind]:
        return [cell.kind for cell in self.cells]

    @property
    def levels(self) -> set[int]:
        return {cell.level for cell in self.cells}

    def overlap_lengths(self) -> list[int]:
        """Overlap of each consecutive pair of cells (0 when they only touch)."""
        return [
            max(0, first.end - second.offset)
            for first, second in zip(self.cells, self.cells[1:])
        ]

    def overlap_total(self) -> int:
        """Symbols shared by each pair of cells, summed over every pair.

        While no position lies under three cells, the cell lengths minus this
        total give back ``parent_length``.
        """
        total = 0
        for index, cell in enumerate(self.cells):
            for later in islice(self.cells, index + 1, None):
                if later.offset >= cell.end:
                    break
                total += min(cell.end, later.end) - later.offset
        return total

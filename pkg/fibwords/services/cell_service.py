"""Overlapping self-similar decompositions of f(a,b,n) and their flattening.

Offsets come from the length recurrence only; no word is searched. The three
decomposition rows are laid out as flat kind sequences at the lower level, in
which composite I-cells tile the parent without overlap. Expanding an I-cell
into its F/T copies is what introduces overlaps.
"""

import logging
from functools import lru_cache
from typing import Iterable, Optional

from fibwords.exceptions import (
    ConstructionMismatchError,
    CoverageGapError,
    DepthExhaustedError,
    NTooSmallError,
    OverlapConflictError,
    PreconditionError,
)
from fibwords.models.cell import Cell, CellKind, CellStructure, DecompositionCase
from fibwords.models.params import Params
from fibwords.models.word import Word
from fibwords.services.word_service import (
    I_MIN_LEVEL,
    LENGTH_LIMIT,
    WordService,
    first_difference,
    get_word_service,
    length_f,
    lengths,
    rs,
)

logger = logging.getLogger(__name__)

F, T, I = CellKind.F, CellKind.T, CellKind.I


def _group(x: int) -> list[CellKind]:
    """Kinds of f(k)^x I(k) t(k)^(x-1), the layout of f(k+1)^2."""
    return [F] * x + [I] + [T] * (x - 1)


def _with_cells(structure: CellStructure, cells: Iterable[Cell]) -> CellStructure:
    return CellStructure(
        params=structure.params,
        root_level=structure.root_level,
        parent_length=structure.parent_length,
        period=structure.period,
        self_similar=structure.self_similar,
        cells=tuple(sorted(cells, key=lambda cell: cell.offset)),
    )


def _earlier_cell(cells: tuple[Cell, ...], index: int, position: int) -> int:
    for earlier in range(index - 1, -1, -1):
        if cells[earlier].offset <= position < cells[earlier].end:
            return earlier
    return index


class CellService:
    """Service for decomposing f(a,b,n) into cells and rebuilding it.

    Each decomposition row lowers the level by a fixed drop and accepts n
    from a base minimum, raised by one when a or b is 1.

    Attributes:
        words: Word service used when cells are flattened.
    """

    BASE_MINIMUM = {
        DecompositionCase.R_EVEN: 7,
        DecompositionCase.BOTH_ODD: 8,
        DecompositionCase.ODD_EVEN: 9,
    }

    LEVEL_DROP = {
        DecompositionCase.R_EVEN: 2,
        DecompositionCase.BOTH_ODD: 3,
        DecompositionCase.ODD_EVEN: 4,
    }

    F_SQUARED_MINIMUM = 6

    def __init__(self, words: Optional[WordService] = None) -> None:
        """Initialize the cell service.

        Args:
            words: Word service for flattening; the shared one when omitted.
        """
        self.words = words or get_word_service()

    @staticmethod
    def period_l(params: Params) -> int:
        """Level drop of one self-similar round: 2, 4 or 6 by the parities of a, b."""
        odd = params.a % 2 + params.b % 2
        return {0: 2, 1: 4, 2: 6}[odd]

    @staticmethod
    def classify(params: Params, n: int) -> DecompositionCase:
        """Route (a, b, n) to its decomposition row from the parities of r(n), s(n)."""
        r, s = rs(params, n)
        if r % 2 == 0:
            return DecompositionCase.R_EVEN
        if s % 2 == 1:
            return DecompositionCase.BOTH_ODD
        return DecompositionCase.ODD_EVEN

    def minimum_n(self, params: Params, case: DecompositionCase) -> int:
        """Smallest n a decomposition row accepts (one more when a or b is 1)."""
        return self.BASE_MINIMUM[case] + int(params.has_unit_parameter)

    def _require_case(self, params: Params, n: int, expected: DecompositionCase) -> None:
        actual = self.classify(params, n)
        if actual is not expected:
            raise PreconditionError(
                f"({params.a},{params.b},{n}) belongs to the {actual.value} case, "
                f"not {expected.value}"
            )
        minimum = self.minimum_n(params, expected)
        if n < minimum:
            raise NTooSmallError(expected.value, n, minimum)

    @staticmethod
    def _layout(
        params: Params,
        root_level: int,
        level: int,
        kinds: Iterable[CellKind],
        parent_length: int,
        period: int,
        self_similar: bool,
    ) -> CellStructure:
        """Place kinds end to end at ``level`` and check they fill the parent."""
        table = lengths(params, level)
        f_length = table[level]
        i_length = f_length + 2 * table[level - 1]
        cells = []
        cursor = 0
        for kind in kinds:
            length = i_length if kind is I else f_length
            cells.append(Cell(kind, level, cursor, length))
            cursor += length
        if cursor != parent_length:
            raise ConstructionMismatchError(
                f"cells of {params} at level {level} cover {cursor} symbols, "
                f"parent has {parent_length}",
                position=min(cursor, parent_length),
            )
        return CellStructure(
            params=params,
            root_level=root_level,
            parent_length=parent_length,
            period=period,
            self_similar=self_similar,
            cells=tuple(cells),
        )

    def decompose_even_r(self, params: Params, n: int) -> CellStructure:
        """Decompose f(n) when r(n) is even.

        f(n) = (f^s I t^(s-1))^(r/2) f with every factor at level n-2.

        Raises:
            PreconditionError: If r(n) is odd.
            NTooSmallError: If n is below the row minimum.
        """
        self._require_case(params, n, DecompositionCase.R_EVEN)
        r, s = rs(params, n)
        kinds = _group(s) * (r // 2) + [F]
        return self._layout(params, n, n - 2, kinds, length_f(params, n), 2, True)

    def decompose_odd_odd(self, params: Params, n: int) -> CellStructure:
        """Decompose f(n) when r(n) and s(n) are both odd, one step down to n-3.

        Each group is f(n-2)^2 = f^r I t^(r-1) at level n-3; groups are
        arranged as [G^((s+1)/2) t G^((s-1)/2) f]^((r-1)/2) G^((s+1)/2) t.
        The single step repeats its own pattern only when a = b.

        Raises:
            PreconditionError: If r(n) or s(n) is even.
            NTooSmallError: If n is below the row minimum.
        """
        self._require_case(params, n, DecompositionCase.BOTH_ODD)
        r, s = rs(params, n)
        group = _group(r)
        block = group * ((s + 1) // 2) + [T] + group * ((s - 1) // 2) + [F]
        kinds = block * ((r - 1) // 2) + group * ((s + 1) // 2) + [T]
        return self._layout(
            params, n, n - 3, kinds, length_f(params, n), 3, params.a == params.b
        )

    def decompose_odd_even(self, params: Params, n: int) -> CellStructure:
        """Decompose f(n) when r(n) is odd and s(n) is even, down to level n-4.

        Raises:
            PreconditionError: If r(n) is even or s(n) is odd.
            NTooSmallError: If n is below the row minimum.
        """
        self._require_case(params, n, DecompositionCase.ODD_EVEN)
        r, s = rs(params, n)
        group = _group(s)
        # f(n-2) and its last-two-swapped twin, then f(n-1) with either ending
        x_part = group * ((r + 1) // 2) + [T] + group * ((r - 1) // 2) + [F]
        c_part = group * ((r + 1) // 2) + [F]
        d_part = group * ((r + 1) // 2) + [T]
        brace = x_part * (s // 2) + c_part + x_part * ((s - 2) // 2) + d_part
        kinds = brace * ((r - 1) // 2) + x_part * (s // 2) + c_part
        return self._layout(params, n, n - 4, kinds, length_f(params, n), 4, True)

    def decompose(
        self, params: Params, n: int, expand: bool = False, compose_twice: bool = False
    ) -> CellStructure:
        """Decompose f(a,b,n) with the row its parity case selects.

        Args:
            params: Word family parameters.
            n: Level of the parent word.
            expand: Replace every I-cell by its overlapping F/T cells.
            compose_twice: Both-odd case only; apply the row twice so every
                cell sits at level n-6 and the pattern is self-similar.

        Returns:
            The cell structure of f(a,b,n).

        Raises:
            NTooSmallError: If n is below the case minimum (three more with
                compose_twice).
            PreconditionError: If compose_twice is requested outside the
                both-odd case.
        """
        case = self.classify(params, n)
        minimum = self.minimum_n(params, case)
        if compose_twice:
            if case is not DecompositionCase.BOTH_ODD:
                raise PreconditionError(
                    f"compose_twice applies to the both-odd case only, "
                    f"({params.a},{params.b},{n}) is {case.value}"
                )
            minimum += self.LEVEL_DROP[case]
        if n < minimum:
            raise NTooSmallError(case.value, n, minimum)

        if case is DecompositionCase.R_EVEN:
            structure = self.decompose_even_r(params, n)
        elif case is DecompositionCase.BOTH_ODD:
            structure = self.decompose_odd_odd(params, n)
            if compose_twice:
                refined = self.refine(structure, 1)
                structure = CellStructure(
                    params=params,
                    root_level=n,
                    parent_length=refined.parent_length,
                    period=6,
                    self_similar=True,
                    cells=refined.cells,
                )
        else:
            structure = self.decompose_odd_even(params, n)

        logger.debug(
            "Decomposed word",
            extra={
                "a": params.a,
                "b": params.b,
                "n": n,
                "case": case.value,
                "cells": len(structure),
                "period": structure.period,
            },
        )
        return self.expand_all_I(structure) if expand else structure

    @staticmethod
    def expand_I(cell: Cell, params: Params) -> list[Cell]:
        """Split an I-cell at level m into its overlapping F/T cells.

        r(m) >= 2 gives F at the cell offset and T at offset + 2 L(m-1);
        r(m) = 1 gives F, F, T at offset, offset + L(m-1), offset + 2 L(m-1).

        Raises:
            PreconditionError: If the cell is not an I-cell or m < 5.
        """
        if cell.kind is not I:
            raise PreconditionError(f"expand_I needs an I-cell, got {cell.kind.value}")
        m = cell.level
        if m < I_MIN_LEVEL:
            raise PreconditionError(f"I-cells exist for level >= {I_MIN_LEVEL}, got {m}")
        table = lengths(params, m)
        f_length, step = table[m], table[m - 1]
        origin = cell.offset
        if rs(params, m).r >= 2:
            return [
                Cell(F, m, origin, f_length),
                Cell(T, m, origin + 2 * step, f_length),
            ]
        return [
            Cell(F, m, origin, f_length),
            Cell(F, m, origin + step, f_length),
            Cell(T, m, origin + 2 * step, f_length),
        ]

    def _expanded_cells(self, structure: CellStructure) -> list[Cell]:
        cells: list[Cell] = []
        for cell in structure:
            if cell.kind is I:
                cells.extend(self.expand_I(cell, structure.params))
            else:
                cells.append(cell)
        return cells

    def expand_all_I(self, structure: CellStructure) -> CellStructure:
        """Replace every I-cell by its F/T cells."""
        if I not in structure.kinds:
            return structure
        return _with_cells(structure, self._expanded_cells(structure))

    def expand_f_squared(self, params: Params, n: int) -> CellStructure:
        """Cells of f(n)^2 = f^r I t^(r-1) at level n-1, r = r(n).

        Raises:
            NTooSmallError: If n < 6 (7 when a or b is 1).
        """
        minimum = self.F_SQUARED_MINIMUM + int(params.has_unit_parameter)
        if n < minimum:
            raise NTooSmallError("f-squared", n, minimum)
        kinds = _group(rs(params, n).r)
        return self._layout(params, n, n - 1, kinds, 2 * length_f(params, n), 1, False)

    def refine(
        self, structure: CellStructure, depth: int, expand: bool = False
    ) -> CellStructure:
        """Subdivide every cell again with its own level's decomposition.

        Each step expands I-cells, decomposes every F/T cell at its level (a
        T-cell uses the f decomposition with its last sub-cell's kind toggled)
        and shifts the sub-cells to the cell's offset.

        Args:
            structure: Structure to refine.
            depth: Number of refinement steps; 0 returns the structure unchanged.
            expand: Expand the I-cells left by the last step.

        Raises:
            PreconditionError: If depth is negative.
            DepthExhaustedError: If a step would decompose below a case minimum.
        """
        if depth < 0:
            raise PreconditionError(f"depth must be nonnegative, got {depth}")
        params = structure.params
        compose_twice = structure.period == 6
        current = structure
        for step in range(1, depth + 1):
            refined: list[Cell] = []
            pieces: dict[int, CellStructure] = {}
            for cell in self._expanded_cells(current):
                sub = pieces.get(cell.level)
                if sub is None:
                    try:
                        sub = self.decompose(params, cell.level, compose_twice=compose_twice)
                    except NTooSmallError as exc:
                        raise DepthExhaustedError(step, cell.level, exc.minimum) from exc
                    pieces[cell.level] = sub
                sub_cells = list(sub.cells)
                if cell.kind is T:
                    sub_cells[-1] = sub_cells[-1].with_kind(sub_cells[-1].kind.toggled())
                refined.extend(sub_cell.shifted(cell.offset) for sub_cell in sub_cells)
            current = _with_cells(current, refined)
            logger.debug(
                "Refined structure",
                extra={
                    "a": params.a,
                    "b": params.b,
                    "n": structure.root_level,
                    "step": step,
                    "cells": len(current),
                },
            )
        return self.expand_all_I(current) if expand else current

    def _cell_symbols(self, params: Params, cell: Cell) -> str:
        if cell.kind is F:
            return self.words.f_symbols(params, cell.level, LENGTH_LIMIT)
        if cell.kind is T:
            return self.words.t_symbols(params, cell.level, LENGTH_LIMIT)
        return self.words.i_symbols(params, cell.level, LENGTH_LIMIT)

    def flatten(self, structure: CellStructure, cap: Optional[int] = None) -> Word:
        """Write every cell's word at its offset and return the parent word.

        Raises:
            WordTooLargeError: If the parent exceeds the cap.
            CoverageGapError: If some position is covered by no cell.
            OverlapConflictError: If overlapping cells disagree on a symbol.
        """
        self.words.ensure_fits(structure.parent_length, cap)

        params = structure.params
        cells = structure.cells
        buffer = bytearray(structure.parent_length)
        encoded: dict[tuple[CellKind, int], bytes] = {}
        covered = 0
        for index, cell in enumerate(cells):
            if cell.offset > covered:
                raise CoverageGapError(covered)
            key = (cell.kind, cell.level)
            data = encoded.get(key)
            if data is None:
                data = self._cell_symbols(params, cell).encode("ascii")
                encoded[key] = data
            if len(data) != cell.length:
                raise ConstructionMismatchError(
                    f"cell {index} claims {cell.length} symbols, its word has {len(data)}"
                )
            shared_end = min(covered, cell.end)
            if shared_end > cell.offset:
                existing = buffer[cell.offset : shared_end]
                incoming = data[: shared_end - cell.offset]
                if existing != incoming:
                    delta = first_difference(
                        existing.decode("ascii"), incoming.decode("ascii")
                    )
                    position = cell.offset + (delta or 0)
                    raise OverlapConflictError(
                        position, _earlier_cell(cells, index, position), index
                    )
            if cell.end > covered:
                buffer[covered : cell.end] = data[covered - cell.offset :]
                covered = cell.end
        if covered < structure.parent_length:
            raise CoverageGapError(covered)
        return Word(buffer.decode("ascii"))


@lru_cache()
def get_cell_service() -> CellService:
    """Get the shared cell service bound to the shared word service."""
    return CellService(get_word_service())

"""Cell structure records for structured output."""

from pydantic import BaseModel, Field

from fibwords.models.cell import Cell, CellKind, CellStructure
from fibwords.models.params import Convention, Params
from fibwords.services.word_service import length_f


class CellRecord(BaseModel):
    """One cell: kind, level, offset, length (in this order)."""

    kind: CellKind
    level: int = Field(ge=0)
    offset: int = Field(ge=0)
    length: int = Field(ge=1)

    model_config = {"from_attributes": True}

    def to_cell(self) -> Cell:
        return Cell(kind=self.kind, level=self.level, offset=self.offset, length=self.length)


class CellStructureRecord(BaseModel):
    """Flat, tree-free serialization of a CellStructure.

    Keys are emitted as a, b, n, convention, period, self_similar, cells.
    """

    a: int = Field(ge=1)
    b: int = Field(ge=1)
    n: int = Field(ge=0)
    convention: Convention
    period: int
    self_similar: bool
    cells: list[CellRecord]

    @classmethod
    def from_structure(cls, structure: CellStructure) -> "CellStructureRecord":
        params = structure.params
        return cls(
            a=params.a,
            b=params.b,
            n=structure.root_level,
            convention=params.convention,
            period=structure.period,
            self_similar=structure.self_similar,
            cells=[CellRecord.model_validate(cell) for cell in structure.cells],
        )

    def to_structure(self) -> CellStructure:
        """Rebuild the structure; period 1 marks the f(n)^2 parent."""
        params = Params(self.a, self.b, self.convention)
        parent_length = length_f(params, self.n)
        if self.period == 1:
            parent_length *= 2
        return CellStructure(
            params=params,
            root_level=self.n,
            parent_length=parent_length,
            period=self.period,
            self_similar=self.self_similar,
            cells=tuple(record.to_cell() for record in self.cells),
        )

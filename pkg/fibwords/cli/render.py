"""Plain-text rendering of command output."""

from fibwords.models.cell import CellStructure
from fibwords.models.report import ReportStatus, VerificationReport
from fibwords.models.stats import FamilyStats
from fibwords.schemas.report import GridSummaryRecord

DIAGRAM_WIDTH = 64

_STATUS_LABELS = {
    ReportStatus.PASS: "PASS",
    ReportStatus.FAIL: "FAIL",
    ReportStatus.SKIPPED: "SKIP",
}


def _bar(start: int, end: int, total: int, width: int) -> str:
    """Bracket spanning [start, end) of a parent of ``total`` symbols."""
    left = start * width // total
    right = max(left + 2, -(-end * width // total))
    right = min(right, width)
    left = min(left, right - 2)
    return " " * left + "[" + "-" * (right - left - 2) + "]"


def render_structure(structure: CellStructure, width: int = DIAGRAM_WIDTH) -> list[str]:
    """Header plus one aligned line per cell, with a bracket diagram of offsets."""
    params = structure.params
    similar = "yes" if structure.self_similar else "no (apply twice)"
    lines = [
        f"f{params} n={structure.root_level} length={structure.parent_length} "
        f"period={structure.period} self-similar={similar} cells={len(structure)}"
    ]
    offset_width = len(str(structure.parent_length))
    index_width = len(str(max(len(structure) - 1, 0)))
    for index, cell in enumerate(structure):
        lines.append(
            f"{index:>{index_width}} {cell.kind.value}{cell.level:<3}"
            f"{cell.offset:>{offset_width}}..{cell.end:<{offset_width}} "
            f"|{_bar(cell.offset, cell.end, structure.parent_length, width):<{width}}|"
        )
    return lines


def render_report(report: VerificationReport) -> str:
    params = report.params
    convention = " classical" if params.is_classical else ""
    line = (
        f"{_STATUS_LABELS[report.status]} {report.identity.value:<16} "
        f"a={params.a} b={params.b} n={report.n}{convention}"
    )
    if report.detail:
        line += f"  {report.detail}"
    return line


def render_summary(summary: GridSummaryRecord) -> str:
    return (
        f"{summary.reports} reports: {summary.passed} passed, "
        f"{summary.failed} failed, {summary.skipped} skipped"
    )


def render_stats(stats: FamilyStats) -> list[str]:
    """Length table, period and per-row cell counts."""
    params = stats.params
    lines = [f"f{params} period={stats.period}"]
    length_width = max(len("L(n)"), *(len(str(level.length)) for level in stats.levels))
    lines.append(f"{'n':>3} {'L(n)':>{length_width}} {'r':>3} {'s':>3}  case")
    for level in stats.levels:
        lines.append(
            f"{level.n:>3} {level.length:>{length_width}} {level.r:>3} {level.s:>3}  "
            f"{level.case.value}"
        )
    for row in stats.rows:
        lines.append(
            f"row {row.case.value}: n={row.n} level={row.level} "
            f"cells={row.cells} expanded={row.expanded_cells}"
        )
    return lines

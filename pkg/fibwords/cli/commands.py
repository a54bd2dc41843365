"""Subcommand handlers. Each prints to stdout and returns an exit status."""

import logging

from fibwords.cli.render import (
    render_report,
    render_stats,
    render_structure,
    render_summary,
)
from fibwords.config import get_settings
from fibwords.exceptions import UndefinedWordError
from fibwords.models.report import IdentityId
from fibwords.schemas.cli import CliConfig
from fibwords.schemas.report import GridSummaryRecord, ReportRecord
from fibwords.schemas.structure import CellStructureRecord
from fibwords.schemas.word import StatsRecord, WordRecord
from fibwords.services.cell_service import get_cell_service
from fibwords.services.stats_service import get_stats_service
from fibwords.services.verification_service import get_verification_service
from fibwords.services.word_service import get_word_service, length_f, length_I

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_WORD_BUILDERS = {
    "f": "word_f",
    "t": "word_t",
    "p": "palindromic_prefix",
    "I": "word_I",
}


def _word_length(config: CliConfig) -> int:
    params, n = config.params, config.n or 0
    if config.word == "I":
        return length_I(params, n)
    length = length_f(params, n)
    if config.word in ("t", "p") and length < 2:
        raise UndefinedWordError(config.word, params.a, params.b, n)
    return length - 2 if config.word == "p" else length


def _inclusive(bounds: tuple[int, int]) -> range:
    lo, hi = bounds
    return range(lo, hi + 1)


def cmd_gen(config: CliConfig) -> int:
    """Print f (or t, p, I) as a 0/1 string, or only its length.

    With --length-only nothing is built, but the length must still fit the cap.
    """
    words = get_word_service()
    params, n = config.params, config.n or 0
    if config.length_only:
        length = _word_length(config)
        words.ensure_fits(length, config.length_cap)
        symbols = None
    else:
        word = getattr(words, _WORD_BUILDERS[config.word])(params, n, config.length_cap)
        length, symbols = len(word), word.symbols

    if config.output_format == "structured":
        record = WordRecord(
            a=params.a,
            b=params.b,
            n=n,
            convention=params.convention,
            word=config.word,
            length=length,
            symbols=symbols,
        )
        print(record.model_dump_json(exclude_none=True))
    else:
        print(length if symbols is None else symbols)
    return EXIT_OK


def cmd_decompose(config: CliConfig) -> int:
    """Print the (optionally refined, expanded or composed) cell structure."""
    cells = get_cell_service()
    structure = cells.decompose(
        config.params, config.n or 0, compose_twice=config.compose_twice
    )
    structure = cells.refine(structure, config.depth, expand=config.expand_i)
    if config.output_format == "structured":
        print(CellStructureRecord.from_structure(structure).model_dump_json())
    else:
        print("\n".join(render_structure(structure)))
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    """Run the identity grid; exit 1 when any identity failed."""
    settings = get_settings()
    a_range = _inclusive(config.a_range) if config.a_range else settings.grid_a_range
    b_range = _inclusive(config.b_range) if config.b_range else settings.grid_b_range
    reports = get_verification_service().verify_grid(
        a_range,
        b_range,
        config.n_max if config.n_max is not None else 0,
        length_cap=config.length_cap,
        ids=config.ids if config.ids is not None else list(IdentityId),
        classical=config.classical,
        workers=config.workers,
    )
    summary = GridSummaryRecord.from_reports(reports)
    if config.output_format == "structured":
        for report in reports:
            print(ReportRecord.from_report(report).model_dump_json())
    else:
        for report in reports:
            print(render_report(report))
        print(render_summary(summary))
    logger.info("Verify finished", extra=summary.model_dump())
    return EXIT_FAILED if summary.failed else EXIT_OK


def cmd_stats(config: CliConfig) -> int:
    """Print the length table, period and row cell counts of one (a, b)."""
    n_max = config.n_max if config.n_max is not None else 10
    stats = get_stats_service().family_stats(config.params, n_max)
    if config.output_format == "structured":
        print(StatsRecord.from_stats(stats).model_dump_json())
    else:
        print("\n".join(render_stats(stats)))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "stats": cmd_stats,
}

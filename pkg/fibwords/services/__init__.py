"""Word generation, cell decomposition, statistics and verification services."""

from fibwords.services.cell_service import CellService, get_cell_service
from fibwords.services.stats_service import StatsService, get_stats_service
from fibwords.services.verification_service import (
    VerificationService,
    check_balanced,
    get_verification_service,
)
from fibwords.services.word_service import (
    WordService,
    get_word_service,
    length_f,
    length_I,
    lengths,
    rs,
)


def reset_services() -> None:
    """Drop the shared services and every cached word and length table."""
    for accessor in (
        get_verification_service,
        get_stats_service,
        get_cell_service,
        get_word_service,
    ):
        accessor.cache_clear()
    lengths.cache_clear()


__all__ = [
    # Words
    "WordService",
    "get_word_service",
    "length_I",
    "length_f",
    "lengths",
    "rs",
    # Cells
    "CellService",
    "get_cell_service",
    # Stats
    "StatsService",
    "get_stats_service",
    # Verification
    "VerificationService",
    "check_balanced",
    "get_verification_service",
    # Lifecycle
    "reset_services",
]

"""Pytest configuration and shared fixtures."""

import logging
import os
from typing import Iterator

import pytest

from fibwords.config import Settings, get_settings
from fibwords.models.params import Params
from fibwords.services import (
    CellService,
    StatsService,
    VerificationService,
    WordService,
    get_cell_service,
    get_stats_service,
    get_verification_service,
    get_word_service,
    reset_services,
)


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch) -> Iterator[None]:
    """Drop FIBWORDS_* variables, the settings and every shared service around each test."""
    for key in list(os.environ):
        if key.startswith("FIBWORDS_"):
            monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    reset_services()
    yield
    get_settings.cache_clear()
    reset_services()


@pytest.fixture
def settings() -> Settings:
    """Provide settings to individual tests."""
    return get_settings()


@pytest.fixture
def words() -> WordService:
    """The shared word service."""
    return get_word_service()


@pytest.fixture
def cells() -> CellService:
    """The shared cell service."""
    return get_cell_service()


@pytest.fixture
def verifier() -> VerificationService:
    """The shared verification service."""
    return get_verification_service()


@pytest.fixture
def stats() -> StatsService:
    """The shared stats service."""
    return get_stats_service()


@pytest.fixture
def params_2_3() -> Params:
    """The (2, 3) family used in the worked examples."""
    return Params(2, 3)


@pytest.fixture
def classical() -> Params:
    """Classical Fibonacci words (a = b = 1, f0 = 1, f1 = 0)."""
    return Params.classical()


@pytest.fixture
def small_cap(monkeypatch) -> int:
    """Shrink the global word cap to 1000 symbols.

    Services are rebuilt afterwards, so request this fixture before any
    service fixture.
    """
    monkeypatch.setenv("FIBWORDS_MAX_WORD_LENGTH", "1000")
    monkeypatch.setenv("FIBWORDS_DEFAULT_LENGTH_CAP", "1000")
    get_settings.cache_clear()
    reset_services()
    return 1000


@pytest.fixture(autouse=True)
def restore_root_logging() -> Iterator[None]:
    """Undo setup_logging calls made by CLI tests."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)

"""Shared test fixtures for digitsum tests."""

from collections.abc import Generator

import pytest

from digitsum_crunchtools.models import Tableau

# The 3 x 5 tableau worked out by hand for b = 3, k = 5.
A5_ROWS = [
    [0, 1, 2, 3, 4],
    [9, 10, 11, 6, 5],
    [12, 13, 14, 7, 8],
]


@pytest.fixture(autouse=True)
def _reset_config_singleton(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Clear DIGITSUM_* variables and the config singleton between tests."""
    import digitsum_crunchtools.config as config_mod

    for name in (
        "DIGITSUM_WITNESS_CAP",
        "DIGITSUM_TRUNCATION_DEPTH",
        "DIGITSUM_JOBS",
        "DIGITSUM_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    config_mod._config = None
    yield
    config_mod._config = None


@pytest.fixture
def a5() -> Tableau:
    """The b = 3, k = 5 reference tableau."""
    return Tableau(base=3, width=5, entries=tuple(tuple(row) for row in A5_ROWS))

import sys
from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent

_capman = None


def pytest_configure(config):
    global _capman
    _capman = config.pluginmanager.getplugin("capturemanager")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return REPO / "fixtures"


def progress(line: str) -> None:
    """Emit a line that bypasses pytest capture (acceptance reporting)."""
    if _capman is not None:
        with _capman.global_and_fixture_disabled():
            sys.stdout.write(line + "\n")
            sys.stdout.flush()
    else:
        sys.__stdout__.write(line + "\n")
        sys.__stdout__.flush()

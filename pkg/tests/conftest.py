import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def spec_dir():
    return ROOT / "specs"


def pytest_terminal_summary(terminalreporter):
    results = sys.modules.get("test_acceptance")
    results = getattr(results, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])

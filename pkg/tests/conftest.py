from pathlib import Path

import pytest
from hypothesis import settings

from toric_motives.io import load_fan, load_homology

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=60)
settings.load_profile("repo")


@pytest.fixture
def fixture_fan():
    return lambda name: load_fan(FIXTURES / name)


@pytest.fixture
def fixture_homology():
    return lambda name: load_homology(FIXTURES / name)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: [int(x) if x.isdigit() else x for x in k.split(".")]):
        ok, text = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key} {text}")

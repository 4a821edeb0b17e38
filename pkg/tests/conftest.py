import os

import pytest
from hypothesis import settings

from etpoly.corpus import corpus as _corpus

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

_ACCEPTANCE: dict[int, tuple[str, bool, list[str]]] = {}


@pytest.fixture(scope="session")
def corpus():
    return _corpus()


@pytest.fixture(scope="session")
def et_seed():
    return int(os.environ.get("ET_SEED", "20240601"))


class Criterion:
    """Collects sub-checks of one acceptance criterion."""

    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.failures: list[str] = []

    def check(self, ok: bool, what: str) -> None:
        if not ok:
            self.failures.append(what)

    def finish(self) -> None:
        _ACCEPTANCE[self.number] = (self.title, not self.failures, self.failures)
        assert not self.failures, f"criterion {self.number} failed: {self.failures[:5]}"


@pytest.fixture
def criterion():
    made = []

    def make(number: int, title: str) -> Criterion:
        c = Criterion(number, title)
        _ACCEPTANCE[number] = (title, False, ["did not finish"])
        made.append(c)
        return c

    return make


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, failures = _ACCEPTANCE[number]
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if failures:
            line += f"  -- {failures[0]}"
        terminalreporter.write_line(line)

from __future__ import annotations

from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[int, bool, str]] = []


class _Criterion:
    def __init__(self):
        self.notes: list[str] = []

    def note(self, text: str) -> None:
        self.notes.append(text)

    @contextmanager
    def __call__(self, number: int, title: str):
        self.notes = []
        try:
            yield self
        except BaseException:
            _RESULTS.append((number, False, title + self._suffix()))
            raise
        _RESULTS.append((number, True, title + self._suffix()))

    def _suffix(self) -> str:
        return f" ({'; '.join(self.notes)})" if self.notes else ""


@pytest.fixture
def criterion():
    return _Criterion()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, text in sorted(_RESULTS):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {text}")

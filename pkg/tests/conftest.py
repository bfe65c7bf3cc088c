"""Shared pytest plumbing.

The acceptance tests report one line per criterion; capture would hide
those on passing runs, so they are replayed in the terminal summary.
"""

_criterion_lines = []


def record_criterion_line(line: str) -> None:
    _criterion_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.line(line)

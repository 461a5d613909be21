"""Shared fixtures and the per-criterion acceptance summary."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import numpy as np
import pytest

from greedydct.pgm import read_pgm

FIXTURES = Path(__file__).parent / "fixtures"

_criteria: dict[int, dict] = defaultdict(lambda: {"title": "", "outcomes": []})


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        number, title = marker
        _criteria[number]["title"] = title
        _criteria[number]["outcomes"].append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report._criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        c = _criteria[number]
        outcomes = [o for _, o in c["outcomes"]]
        if any(o == "failed" for o in outcomes):
            status = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        skipped = sum(o == "skipped" for o in outcomes)
        note = f" ({skipped} conditional check(s) skipped)" if skipped and status == "PASS" else ""
        tr.write_line(f"criterion {number:2d} {status}: {c['title']}{note}")


@pytest.fixture(scope="session")
def fixture_images() -> dict[str, np.ndarray]:
    return {p.stem: read_pgm(p) for p in sorted(FIXTURES.glob("*.pgm"))}

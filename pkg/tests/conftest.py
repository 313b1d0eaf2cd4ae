import re
import time
from collections import defaultdict

import pytest

from nlgames.game import GameTable
from nlgames.scan import scan, summarize

# Example games written out as winner tables, {(x, y): [(a, b), ...]}.
EXAMPLE_TABLES = {
    # 4+2+1+1
    "4211": {(0, 0): [(0, 0), (0, 1), (1, 0), (1, 1)], (0, 1): [(0, 0), (1, 1)], (1, 0): [(0, 1)], (1, 1): [(1, 0)]},
    # CHSH
    "2222": {(0, 0): [(0, 0), (1, 1)], (0, 1): [(0, 0), (1, 1)], (1, 0): [(0, 0), (1, 1)], (1, 1): [(0, 1), (1, 0)]},
    # 3+2+2+1
    "3221": {(0, 0): [(0, 0), (0, 1), (1, 1)], (0, 1): [(0, 0), (1, 1)], (1, 0): [(0, 1)], (1, 1): [(0, 0), (1, 1)]},
    # 3+3+2+1
    "3321": {(0, 0): [(0, 0), (1, 1)], (0, 1): [(0, 0), (0, 1), (1, 0)], (1, 0): [(1, 1)], (1, 1): [(0, 0), (0, 1), (1, 1)]},
    # 3+3+3+1
    "3331": {(0, 0): [(0, 0)], (0, 1): [(0, 0), (1, 0), (1, 1)], (1, 0): [(0, 0), (0, 1), (1, 1)], (1, 1): [(0, 1), (1, 0), (1, 1)]},
    # 2+2+2+1
    "2221": {(0, 0): [(0, 0), (1, 1)], (0, 1): [(0, 1), (1, 0)], (1, 0): [(1, 1)], (1, 1): [(0, 0), (1, 1)]},
    # 3+1+1+1
    "3111": {(0, 0): [(0, 0), (0, 1), (1, 0)], (0, 1): [(1, 1)], (1, 0): [(0, 1)], (1, 1): [(1, 0)]},
    # 2+1+1+1
    "2111": {(0, 0): [(0, 1), (1, 0)], (0, 1): [(1, 1)], (1, 0): [(0, 1)], (1, 1): [(1, 0)]},
}


@pytest.fixture(scope="session")
def examples():
    return {k: GameTable.from_winners(v) for k, v in EXAMPLE_TABLES.items()}


@pytest.fixture(scope="session")
def admissible_scan():
    start = time.perf_counter()
    records = scan(admissible_only=True, workers=1)
    return records, time.perf_counter() - start


@pytest.fixture(scope="session")
def admissible_summaries(admissible_scan):
    return summarize(admissible_scan[0])


@pytest.fixture(scope="session")
def full_scan():
    return scan(admissible_only=False, workers=1)


# --- one pass/fail line per acceptance criterion -------------------------

_criteria: dict[str, list[str]] = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m:
        _criteria[m.group(1)].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        outcomes = _criteria[key]
        failed = sum(o == "failed" for o in outcomes)
        status = "PASS" if failed == 0 else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status} ({len(outcomes) - failed}/{len(outcomes)} checks)")

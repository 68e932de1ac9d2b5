import json
import random
import re
from pathlib import Path

import pytest

from polyradon import random_polygon

CORPUS = Path(__file__).resolve().parents[1] / "src" / "polyradon" / "corpus"
RANDOM_SEED = 20240611
RANDOM_COUNT = 1000

_criteria: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def manifest() -> dict[str, int]:
    return json.loads((CORPUS / "manifest.json").read_text())


@pytest.fixture(scope="session")
def random_polygons():
    rng = random.Random(RANDOM_SEED)
    return [random_polygon(rng) for _ in range(RANDOM_COUNT)]


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n, name = int(m.group(1)), m.group(2)
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(n, ("", "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
        _criteria[n] = (name.replace("_", " "), status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        name, status = _criteria[n]
        terminalreporter.write_line(f"criterion {n:>2} {name}: {status}")

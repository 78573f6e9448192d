import json
from pathlib import Path

import numpy as np
import pytest

from contextuality import build_graph, builtin_paper_rayset

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def paper_rays():
    return builtin_paper_rayset()


@pytest.fixture(scope="session")
def paper_graph(paper_rays):
    return build_graph(paper_rays, 1e-9)


@pytest.fixture(scope="session")
def hv_fixture():
    return json.loads((FIXTURES / "paper_hidden_variables.json").read_text())


@pytest.fixture
def rng():
    return np.random.default_rng(20121015)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.rsplit("::", 1)[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

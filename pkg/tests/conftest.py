from pathlib import Path

import numpy as np
import pytest

from skewlines.signmat import SignMatrix, SwitchingTransform
from skewlines.textio import parse_matrix

DATA = Path(__file__).parent / "data"


def load(name: str) -> SignMatrix:
    return parse_matrix((DATA / f"{name}.txt").read_text())


@pytest.fixture
def skew6():
    return load("skew6")


@pytest.fixture
def spindle5():
    return load("spindle5")


@pytest.fixture
def tree10():
    return load("tree10")


@pytest.fixture
def cospectral8():
    return load("cospectral8_a"), load("cospectral8_b")


def random_sign_matrix(rng: np.random.Generator, n: int) -> SignMatrix:
    upper = np.triu(rng.choice([-1, 1], size=(n, n)), k=1)
    return SignMatrix.from_rows((upper + upper.T).tolist())


def random_transform(rng: np.random.Generator, n: int) -> SwitchingTransform:
    return SwitchingTransform(
        tuple(int(p) + 1 for p in rng.permutation(n)), tuple(int(s) for s in rng.choice([-1, 1], size=n))
    )


def random_eulerian(rng: np.random.Generator, n: int) -> SignMatrix:
    """Uniform matrix whose rows all have an even number of +1 entries."""
    adj = np.zeros((n, n), dtype=int)
    upper = np.triu(rng.integers(0, 2, size=(n - 1, n - 1)), k=1)
    adj[: n - 1, : n - 1] = upper + upper.T
    odd = adj.sum(axis=1) % 2
    adj[n - 1, :] = adj[:, n - 1] = odd
    adj[n - 1, n - 1] = 0
    x = 2 * adj - 1
    np.fill_diagonal(x, 0)
    return SignMatrix.from_rows(x.tolist())


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


# acceptance report: one line per criterion at the end of the run

_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid or "::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::test_criterion_")[1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split("_")[0])):
        num, _, label = name.partition("_")
        terminalreporter.write_line(f"criterion {num:>2} {label.replace('_', ' '):<40} {_CRITERIA[name]}")

import itertools
from pathlib import Path

import pytest

from hyperposet.hypergraph import GroundInterval, cyclic_interval_edges, parse


def every_hypergraph(n):
    """All cyclic interval hypergraphs on [1, n], in subset order."""
    ground = GroundInterval(1, n)
    edges = cyclic_interval_edges(ground)
    for subset in range(1 << len(edges)):
        yield parse(ground, [e for i, e in enumerate(edges) if subset >> i & 1])


def all_orientations(H):
    """Every orientation, cyclic or not (the unpruned product of edge choices)."""
    return itertools.product(*[sorted(vs) for vs in H.vertex_sets])


def hg(n, *edges):
    """``hg(4, "12", "124")`` with compact digit edges on [1, n]."""
    return parse(GroundInterval(1, n), [[int(c) for c in e] for e in edges])


ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def _repo_root(monkeypatch):
    """Data files are referenced as ``data/...`` relative to the repository."""
    monkeypatch.chdir(ROOT)


@pytest.fixture
def worked6():
    return hg(6, "1236", "234", "1256", "34", "56")


@pytest.fixture
def fixless():
    return hg(4, "12", "124", "34", "134")


ACCEPTANCE = {}


def record(number, title, ok, detail=""):
    """Remember one acceptance criterion's outcome and print it."""
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE[number] = line
    print(line)
    return ok


@pytest.fixture(scope="session")
def sweep5():
    """The full n=5 sweep with both enumeration strategies, shared across criteria."""
    from hyperposet.sweep import verify

    return verify(5, cross_check=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])

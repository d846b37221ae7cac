import pytest
from hypothesis import strategies as st

from supereulerian import Digraph, build_family

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def accept():
    """Record a PASS/FAIL line for the acceptance summary, then assert."""

    def record(criterion: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {criterion}  {detail}".rstrip())
        assert ok, f"criterion {criterion} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_arcs(n, [p for p, keep in zip(pairs, present) if keep])


@pytest.fixture
def c3():
    return Digraph.dicycle(3)


@pytest.fixture
def fam11():
    return build_family(1, 1)

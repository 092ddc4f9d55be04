import random

import pytest
from hypothesis import strategies as st

from locdom.graph import Graph, random_connected_graph

ACCEPTANCE_LINES: list[str] = []


def random_corpus(count, n_min, n_max, seed, p=0.35):
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(n_min, n_max), rng, p) for _ in range(count)]


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        chosen = sorted(set(chosen) | {(i, i + 1) for i in range(n - 1)})
    return Graph.from_edges(n, chosen)


@pytest.fixture
def record_criterion():
    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" -- {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

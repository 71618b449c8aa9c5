import random

import pytest

from cubeahedra.crosscheck import graph_from_mask
from cubeahedra.graphs import Graph


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive sweeps")


@pytest.fixture
def rng():
    return random.Random(20261019)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(n, edges)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


CLAW = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
DIAMOND = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(module.RESULTS, key=lambda s: int(s.split("] ")[1].split(".")[0])):
            terminalreporter.write_line(line)

import random
from math import comb

import pytest

from hibound.hypergraph import all_hypergraphs, random_uniform


@pytest.fixture(scope="session")
def all_3uniform_on_5():
    return list(all_hypergraphs(5, 3))


@pytest.fixture(scope="session")
def all_graphs_on_5():
    return list(all_hypergraphs(5, 2))


def random_instances(count, n_max, seed=0, ks=(2, 3, 4)):
    """``count`` random hypergraphs with k <= n <= n_max and uniform edge count."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        k = rng.choice(ks)
        n = rng.randint(k, n_max)
        m = rng.randint(0, comb(n, k))
        out.append(random_uniform(n, k, m, seed=f"{seed}:{i}"))
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

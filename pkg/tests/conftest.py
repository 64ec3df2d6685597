import random

import pytest

from sizeramsey.graph import graph_from_edges


def random_graph(rng: random.Random, max_order: int = 8, density: float | None = None):
    n = rng.randint(1, max_order)
    p = rng.random() if density is None else density
    return graph_from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)

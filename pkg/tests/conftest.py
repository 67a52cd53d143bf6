import random
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from sharpbounds import (  # noqa: E402
    Graph,
    complete,
    complete_bipartite,
    cycle,
    path,
    petersen,
    prism,
    star,
)

DATA = ROOT / "data"


@pytest.fixture(scope="session")
def cubic_corpus_path():
    return DATA / "cubic_connected_4_10.g6"


@pytest.fixture(scope="session")
def mixed_corpus_path():
    return DATA / "mixed_graphs.g6"


@pytest.fixture(scope="session")
def named_suite():
    """Named graphs with known hand-checked invariant values."""
    return [
        complete(1), complete(2), complete(3), complete(4), complete(6),
        cycle(3), cycle(4), cycle(5), cycle(6),
        path(2), path(3), path(4), path(5),
        star(3), star(4),
        complete_bipartite(2), complete_bipartite(3), complete_bipartite(2, 3),
        prism(3), prism(4),
        petersen(),
    ]


def random_graph(rng: random.Random, n: int, p: float = 0.4,
                 label: str | None = None) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < p]
    return Graph.from_edges(n, edges, label)


@pytest.fixture(scope="session")
def random_suite():
    """220 seeded random graphs on at most 8 vertices."""
    rng = random.Random(1805)
    out = []
    for i in range(220):
        n = rng.randint(1, 8)
        p = rng.choice([0.2, 0.35, 0.5, 0.7])
        out.append(random_graph(rng, n, p, label=f"rand{i}"))
    return out

from __future__ import annotations

import pytest

from cyctri import Graph, Triangulation, brute_force_persistent, iter_graphs

# Published reference counts: persistent graphs on n vertices =
# triangulations of the cyclic polytope on n+2 vertices.
KNOWN_COUNTS = {
    1: 1,
    2: 1,
    3: 2,
    4: 6,
    5: 25,
    6: 138,
    7: 972,
    8: 8_477,
    9: 89_405,
    10: 1_119_280,
    11: 16_384_508,
    12: 276_961_252,
    13: 5_349_351_298,
    14: 116_985_744_912,
    15: 2_873_993_336_097,
    16: 78_768_494_976_617,
}

EXAMPLE7_SIMPLICES = [
    (0, 1, 2, 3),
    (1, 2, 3, 6),
    (0, 3, 4, 5),
    (3, 4, 5, 6),
    (0, 1, 5, 6),
    (0, 1, 3, 5),
    (1, 3, 5, 6),
]

EXAMPLE7_EXTRA_EDGES = [(1, 3), (3, 5), (1, 5)]


@pytest.fixture(scope="session")
def example7_triangulation() -> Triangulation:
    """The worked 7-cell triangulation of the polytope on 7 vertices."""
    return Triangulation(5, EXAMPLE7_SIMPLICES)


@pytest.fixture(scope="session")
def example7_graph() -> Graph:
    """Its persistent graph: the path on 5 plus {1,3}, {3,5}, {1,5}."""
    return Graph(5, [(i, i + 1) for i in range(1, 5)] + EXAMPLE7_EXTRA_EDGES)


@pytest.fixture(scope="session")
def enumerated() -> dict[int, list[Graph]]:
    """Persistent graphs by n in emission order, n <= 8."""
    return {n: list(iter_graphs(n)) for n in range(1, 9)}


@pytest.fixture(scope="session")
def brute_small() -> dict[int, list[Graph]]:
    """Brute-force persistent graphs for n <= 7 (n = 8 is acceptance-only)."""
    return {n: brute_force_persistent(n) for n in range(1, 8)}

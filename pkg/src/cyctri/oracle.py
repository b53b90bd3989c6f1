"""Brute-force ground truth for small sizes.

Two independent reference generators used to cross-check the fast
paths: persistent graphs by exhaustive filtering of all candidate-edge
subsets, and triangulations by exhaustive search over all simplex sets.
Beyond the property checkers they deliberately share no code with the
enumeration or bijection machinery; in particular the triangulation
search re-verifies the union-property from scratch instead of trusting
the per-edge construction.

Caps are hard errors, never silent truncation.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CapExceeded
from .graphs import Graph, _bar_violation, _x_violation
from .triangulations import Triangulation, circuit_violation, validate

PERSISTENT_CAP = 8  # 2^21 candidate subsets at n=8
TRIANGULATION_CAP = 4  # simplex universe has 15 cells at n=4


def brute_force_persistent(n: int) -> list[Graph]:
    """Every persistent graph on n vertices, by filtering all 2^|E|
    supersets of the Hamilton path.  Capped at n=8."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > PERSISTENT_CAP:
        raise CapExceeded(
            f"brute-force graph search capped at n={PERSISTENT_CAP} (asked for {n})"
        )
    base = [0] * (n + 1)
    for i in range(1, n):
        base[i] |= 1 << (i + 1)
        base[i + 1] |= 1 << i
    candidates = [(x, y) for y in range(3, n + 1) for x in range(1, y - 1)]
    found = []
    for mask in range(1 << len(candidates)):
        adj = list(base)
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            u, v = candidates[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if _bar_violation(adj, n) is None and _x_violation(adj, n) is None:
            found.append(Graph._from_adj(n, tuple(adj)))
    return found


def brute_force_triangulations(n: int) -> list[Triangulation]:
    """Every triangulation of the polytope on n+2 vertices, by
    depth-first search over the simplex universe.  Capped at n=4.

    Interleaving cell pairs prune the search; every surviving leaf is
    fully re-validated (union-property included).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > TRIANGULATION_CAP:
        raise CapExceeded(
            f"brute-force triangulation search capped at n={TRIANGULATION_CAP} "
            f"(asked for {n})"
        )
    universe = sorted(combinations(range(n + 2), 4))
    chosen: list[tuple[int, int, int, int]] = []
    found: list[Triangulation] = []

    def search(i: int) -> None:
        if i == len(universe):
            t = Triangulation(n, chosen)
            if validate(t) is None:
                found.append(t)
            return
        search(i + 1)
        cell = universe[i]
        if all(circuit_violation(cell, c) is None for c in chosen):
            chosen.append(cell)
            search(i + 1)
            chosen.pop()

    search(0)
    found.sort(key=lambda t: t.simplices)
    return found

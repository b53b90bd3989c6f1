"""The two mutually inverse maps between triangulations and graphs.

A triangulation of the cyclic polytope on n+2 vertices restricts, on
the inner vertices 1..n, to a persistent graph (:func:`inner_graph`).
Conversely a persistent graph determines one cell per edge
(:func:`edge_simplex`): extend the graph by the universal apexes 0 and
n+1, and send the edge {v,w} to {l, v, w, r} where l is the largest
extended-neighbor of w below v and r the smallest extended-neighbor of
v above w.  Collecting these cells yields a triangulation
(:func:`triangulate`), and the two maps invert each other; per cell the
inverse is simply "take the middle pair" (:func:`middle_edge`).

The anchor queries work directly on the graph's bitsets (the apexes are
folded in as constant bits) so no extended graph is materialized.
"""

from __future__ import annotations

from .errors import NotPersistent
from .graphs import Graph, persistence_violation
from .triangulations import Simplex, Triangulation


def left_anchor(g: Graph, edge: tuple[int, int]) -> int:
    """Largest i < v adjacent to w in the apex-extended graph.

    Always exists because the apex 0 is adjacent to everything.
    """
    v, w = edge
    if not v < w or not g.has_edge(v, w):
        raise ValueError(f"({v}, {w}) is not an ordered edge of the graph")
    below = (g.adj[w] & ((1 << v) - 1)) | 1  # apex 0 is always a neighbor
    return below.bit_length() - 1


def right_anchor(g: Graph, edge: tuple[int, int]) -> int:
    """Smallest i > w adjacent to v in the apex-extended graph.

    Always exists because the apex n+1 is adjacent to everything.
    """
    v, w = edge
    if not v < w or not g.has_edge(v, w):
        raise ValueError(f"({v}, {w}) is not an ordered edge of the graph")
    above = g.adj[v] >> (w + 1)
    if above:
        return w + 1 + (above & -above).bit_length() - 1
    return g.n + 1


def edge_simplex(g: Graph, edge: tuple[int, int]) -> Simplex:
    """The cell {l, v, w, r} attached to the edge {v,w}."""
    v, w = edge
    return (left_anchor(g, edge), v, w, right_anchor(g, edge))


def middle_edge(s) -> tuple[int, int]:
    """The middle pair {b,c} of a cell a < b < c < d (inverse of
    :func:`edge_simplex` on cells of a triangulated persistent graph)."""
    a, b, c, d = sorted(s)
    return (b, c)


def triangulate(g: Graph) -> Triangulation:
    """The triangulation with one cell per edge of ``g``.

    Raises :class:`~cyctri.errors.NotPersistent` (carrying the property
    violation) for non-persistent input rather than producing garbage.
    """
    violation = persistence_violation(g)
    if violation is not None:
        raise NotPersistent(violation)
    cells = [edge_simplex(g, e) for e in g.edges()]
    t = Triangulation(g.n, cells)
    assert len(t) == len(cells), "edge-to-cell map must be injective"
    return t


def inner_graph(t: Triangulation) -> Graph:
    """The graph on 1..n of all vertex pairs covered by some cell.

    The apex vertices 0 and n+1 are dropped: they are adjacent to
    everything and carry no information.
    """
    n = t.n
    edges = [
        (u, v) for u, v in t.covered_pairs() if 1 <= u and v <= n
    ]
    return Graph(n, edges)

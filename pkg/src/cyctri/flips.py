"""Bistellar flips and the flip order on persistent graphs.

Five vertices v1 < ... < v5 of the polytope span a copy of the cyclic
polytope on 5 vertices, which has exactly two triangulations: a
two-cell upper pattern and a three-cell lower pattern.  Replacing the
lower pattern by the upper one inside a triangulation is a bistellar
up-flip; the reverse replacement is a down-flip.

Up-flips generate a partial order on triangulations.  On the graph side
an up-flip is exactly the removal of one edge that keeps the graph
persistent, so the order is reverse subgraph inclusion: the complete
graph is the unique minimum and the bare path the unique maximum.  The
Hasse diagram is therefore built from single-edge deletions, which is
far cheaper than scanning five-vertex witnesses on triangulations.
"""

from __future__ import annotations

from typing import Iterable

from .bijection import left_anchor, right_anchor
from .enumeration import edge_mask, iter_graphs
from .errors import CapExceeded, CyctriError
from .graphs import Graph, is_persistent
from .triangulations import Simplex, Triangulation

FlipWitness = tuple[int, int, int, int, int]

DEFAULT_POSET_CAP = 8


class FlipError(CyctriError):
    """A flip precondition failed; carries the first missing cell."""

    def __init__(self, message: str, missing: Simplex):
        super().__init__(message)
        self.missing = missing


def make_witness(vertices: Iterable[int]) -> FlipWitness:
    w = tuple(vertices)
    if len(w) != 5 or any(a >= b for a, b in zip(w, w[1:])) or w[0] < 0:
        raise ValueError(f"a flip witness needs 5 increasing vertices, got {w!r}")
    return w


def lower_pattern(w: FlipWitness) -> tuple[Simplex, Simplex, Simplex]:
    """The three-cell triangulation of the five witness vertices."""
    v1, v2, v3, v4, v5 = make_witness(w)
    return tuple(sorted([(v1, v2, v4, v5), (v1, v2, v3, v4), (v2, v3, v4, v5)]))


def upper_pattern(w: FlipWitness) -> tuple[Simplex, Simplex]:
    """The two-cell triangulation of the five witness vertices."""
    v1, v2, v3, v4, v5 = make_witness(w)
    return tuple(sorted([(v1, v2, v3, v5), (v1, v3, v4, v5)]))


def _swap_patterns(t: Triangulation, take, put, name: str) -> Triangulation:
    cells = set(t.simplices)
    for s in take:
        if s not in cells:
            raise FlipError(f"{name} needs cell {s} which is not in the triangulation", s)
    cells.difference_update(take)
    if cells & set(put):
        raise FlipError(f"{name} replacement cell already present", next(iter(cells & set(put))))
    cells.update(put)
    return Triangulation(t.n, cells)


def up_flip(t: Triangulation, w: FlipWitness) -> Triangulation:
    """Replace the lower pattern on ``w`` by the upper one (one cell fewer)."""
    return _swap_patterns(t, lower_pattern(w), upper_pattern(w), "up-flip")


def down_flip(t: Triangulation, w: FlipWitness) -> Triangulation:
    """Replace the upper pattern on ``w`` by the lower one (one cell more)."""
    return _swap_patterns(t, upper_pattern(w), lower_pattern(w), "down-flip")


def removable_edges(g: Graph) -> list[tuple[int, int]]:
    """Non-Hamilton edges whose removal keeps the graph persistent.

    Each such edge corresponds to exactly one bistellar up-flip of the
    associated triangulation.  Input must be persistent; result is in
    colexicographic order.
    """
    out = []
    for u, v in g.non_hamilton_edges():
        if is_persistent(g.without_edge(u, v)):
            out.append((u, v))
    return out


def flip_witness(g: Graph, edge: tuple[int, int]) -> FlipWitness:
    """The five-vertex witness of the up-flip that removes ``edge``.

    The witness is (l, v, y, w, r) with l/r the anchors of the edge and
    y the common neighbor of v and w strictly between them; y is unique
    whenever removing the edge keeps the graph persistent (two middle
    vertices would force the removed edge back via the X-property).
    """
    v, w = edge
    if not g.has_edge(v, w) or w - v < 2:
        raise ValueError(f"({v}, {w}) is not a removable candidate")
    between = ((1 << w) - 1) & ~((1 << (v + 1)) - 1)
    common = g.adj[v] & g.adj[w] & between
    if common.bit_count() != 1:
        raise ValueError(
            f"edge ({v}, {w}) has {common.bit_count()} middle witnesses; "
            "it does not correspond to a single flip"
        )
    y = common.bit_length() - 1
    return (left_anchor(g, edge), v, y, w, right_anchor(g, edge))


def flip_leq(g1: Graph, g2: Graph) -> bool:
    """The flip order: g1 below g2 iff the edges of g1 contain those of g2.

    Both graphs must be persistent and share the vertex count.  The
    complete graph is the minimum, the bare path the maximum.
    """
    if g1.n != g2.n:
        raise ValueError(f"vertex counts differ: {g1.n} != {g2.n}")
    return all(a1 & a2 == a2 for a1, a2 in zip(g1.adj, g2.adj))


def hasse_diagram(n: int, cap: int = DEFAULT_POSET_CAP) -> list[tuple[Graph, Graph]]:
    """All cover pairs (g, g minus e) of the flip order on n vertices.

    Sorted by the edge bitmasks of the pair for deterministic output.
    """
    if n > cap:
        raise CapExceeded(f"poset construction capped at n={cap} (asked for {n})")
    covers = []
    for g in iter_graphs(n):
        for e in removable_edges(g):
            covers.append((g, g.without_edge(*e)))
    covers.sort(key=lambda p: (edge_mask(p[0]), edge_mask(p[1])))
    return covers


def hasse_dot(n: int, cap: int = DEFAULT_POSET_CAP) -> str:
    """DOT rendering of the Hasse diagram, one rank per edge count.

    Node ids are the colex edge bitmasks in hexadecimal; labels are edge
    counts.  Arrows point from a graph to the graph with one edge fewer,
    i.e. upward in the flip order.
    """
    covers = hasse_diagram(n, cap=cap)
    nodes: dict[int, int] = {}
    for g in iter_graphs(n):
        nodes[edge_mask(g)] = g.edge_count()
    by_level: dict[int, list[int]] = {}
    for mask, ecount in nodes.items():
        by_level.setdefault(ecount, []).append(mask)
    lines = [f"digraph flip_order_{n} {{"]
    lines.append("  rankdir=BT;")
    lines.append('  node [shape=box, fontname="monospace"];')
    for ecount in sorted(by_level, reverse=True):
        ids = " ".join(f'"{m:x}";' for m in sorted(by_level[ecount]))
        lines.append(f"  {{ rank=same; {ids} }}")
    for mask, ecount in sorted(nodes.items()):
        lines.append(f'  "{mask:x}" [label="{ecount}"];')
    for g, h in covers:
        lines.append(f'  "{edge_mask(g):x}" -> "{edge_mask(h):x}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

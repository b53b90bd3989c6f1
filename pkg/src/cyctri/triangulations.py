"""Simplex sets over the 3-dimensional cyclic polytope and their validation.

The polytope on n+2 vertices (labeled 0..n+1 along the moment curve) has
its boundary faces fixed by Gale's evenness criterion; a set of
4-vertex cells (3-simplices) is a triangulation exactly when

* every triangle facet of a cell is a boundary triangle or shared with
  a second cell (union-property), and
* no two cells contain interleaved vertex sets {x1,x3,x5} / {x2,x4}
  with x1 < x2 < x3 < x4 < x5 (intersection-property; these pairs are
  precisely the circuits of the polytope).

Everything is combinatorial: a cell is its sorted vertex 4-tuple, no
coordinates are ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import ParseError
from .graphs import _parse_record

Simplex = tuple[int, int, int, int]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate and normalize a 4-element vertex set to a sorted tuple."""
    s = tuple(sorted(vertices))
    if len(s) != 4 or len(set(s)) != 4:
        raise ValueError(f"a 3-simplex needs 4 distinct vertices, got {vertices!r}")
    if s[0] < 0:
        raise ValueError(f"negative vertex label in {s}")
    return s


@dataclass(frozen=True)
class CircuitPair:
    """An interleaved pair ({x1,x3,x5}, {x2,x4}) witnessing a circuit."""

    odd: tuple[int, int, int]
    even: tuple[int, int]

    def __post_init__(self) -> None:
        x1, x3, x5 = self.odd
        x2, x4 = self.even
        if not x1 < x2 < x3 < x4 < x5:
            raise ValueError(f"not interleaved: {self.odd} / {self.even}")

    def __str__(self) -> str:
        return f"({set(self.odd)}, {set(self.even)})"


class Triangulation:
    """A set of 3-simplices over the cyclic polytope on n+2 vertices.

    The value is *unvalidated* storage: construction only checks labels
    and shape.  Run :func:`validate` to test the union- and
    intersection-properties.
    """

    __slots__ = ("n", "simplices")

    def __init__(self, n: int, simplices: Iterable[Iterable[int]] = ()) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"inner vertex count must be >= 1, got {n!r}")
        cells = sorted({make_simplex(s) for s in simplices})
        for s in cells:
            if s[3] > n + 1:
                raise ValueError(f"simplex {s} has labels outside 0..{n + 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "simplices", tuple(cells))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Triangulation is immutable")

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.simplices

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Triangulation)
            and self.n == other.n
            and self.simplices == other.simplices
        )

    def __hash__(self) -> int:
        return hash((self.n, self.simplices))

    def __repr__(self) -> str:
        return f"Triangulation(n={self.n}, simplices={list(self.simplices)})"

    def covered_pairs(self) -> set[tuple[int, int]]:
        """All vertex pairs contained in some cell."""
        pairs: set[tuple[int, int]] = set()
        for s in self.simplices:
            pairs.update(combinations(s, 2))
        return pairs

    # -- text format -----------------------------------------------------

    def to_text(self) -> str:
        """Canonical record: ``n <N>`` then one ``a b c d`` line per cell."""
        lines = [f"n {self.n}"]
        lines.extend(" ".join(map(str, s)) for s in self.simplices)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Triangulation":
        n, rows = _parse_record(text, arity=4, kind="triangulation")
        try:
            return cls(n, rows)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


# -- boundary faces by Gale's evenness ---------------------------------------


@lru_cache(maxsize=None)
def boundary_edges(n: int) -> frozenset[tuple[int, int]]:
    """Boundary edges of the polytope on vertices 0..n+1 (3n+1 pairs)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    top = n + 1
    edges = {(0, top)}
    for i in range(1, top):
        edges.add((0, i))
        edges.add((i, top))
        edges.add((i, i + 1))
    return frozenset(edges)


@lru_cache(maxsize=None)
def boundary_triangles(n: int) -> frozenset[tuple[int, int, int]]:
    """Boundary triangles: {0,i,i+1} and {i-1,i,n+1} for 0 < i < n+1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    top = n + 1
    tris = set()
    for i in range(1, top):
        tris.add((0, i, i + 1))
        tris.add(tuple(sorted((i - 1, i, top))))
    return frozenset(tris)


# -- circuits ----------------------------------------------------------------


def _interleave_witness(a: Simplex, b: Simplex) -> Optional[tuple[int, ...]]:
    """(x1..x5) with {x1,x3,x5} in a, {x2,x4} in b, or None.

    Scans the pairs of ``b`` in ascending order so the returned witness
    is deterministic.
    """
    a0, a3 = a[0], a[3]
    for i in range(3):
        for j in range(i + 1, 4):
            b1, b2 = b[i], b[j]
            if a0 < b1 and a3 > b2:
                for v in a:
                    if b1 < v < b2:
                        return (a0, b1, v, b2, a3)
    return None


def circuit_violation(s1, s2) -> Optional[CircuitPair]:
    """A circuit split across the two simplices, or None.

    Returns a pair with odd part inside ``s1`` (checked first) or inside
    ``s2``.  A simplex never interleaves itself.
    """
    s1 = make_simplex(s1)
    s2 = make_simplex(s2)
    w = _interleave_witness(s1, s2)
    if w is None:
        w = _interleave_witness(s2, s1)
    if w is None:
        return None
    x1, x2, x3, x4, x5 = w
    return CircuitPair(odd=(x1, x3, x5), even=(x2, x4))


# -- validation --------------------------------------------------------------

UNSHARED_FACET = "unshared-facet"
OVERSHARED_FACET = "overshared-facet"
UNCOVERED_BOUNDARY = "uncovered-boundary"
CIRCUIT = "circuit"
FORCED_SET_MISMATCH = "forced-set-mismatch"


@dataclass(frozen=True)
class TriangulationViolation:
    """First reason a simplex set is not a triangulation."""

    kind: str
    facet: Optional[tuple[int, int, int]] = None
    circuit: Optional[CircuitPair] = None
    simplices: Optional[tuple[Simplex, Simplex]] = None
    detail: str = ""

    def __str__(self) -> str:
        if self.kind == CIRCUIT:
            return f"{self.kind}: {self.circuit} across {self.simplices}"
        if self.facet is not None:
            return f"{self.kind} at facet {self.facet}{self.detail}"
        return f"{self.kind}{self.detail}"


def _facets(s: Simplex):
    a, b, c, d = s
    return (a, b, c), (a, b, d), (a, c, d), (b, c, d)


def _first_circuit_pair(cells: tuple[Simplex, ...]) -> Optional[tuple[int, int]]:
    """Indices (i, j), i < j, of the first interleaving cell pair."""
    from . import _kernels

    idx = _kernels.first_circuit(cells)
    if idx < 0:
        return None
    m = len(cells)
    return idx // m, idx % m


def validate(t: Triangulation) -> Optional[TriangulationViolation]:
    """None if ``t`` is a triangulation of the polytope, else the first
    violation found.

    Checks, in order: the forced cell sets for n <= 2, the
    union-property over facets in sorted order (interior facets must be
    shared by exactly two cells), exact single coverage of every
    boundary triangle, and finally the intersection-property over cell
    pairs in sorted order.
    """
    n = t.n
    if n <= 2:
        forced: tuple[Simplex, ...] = () if n == 1 else ((0, 1, 2, 3),)
        if t.simplices != forced:
            return TriangulationViolation(
                FORCED_SET_MISMATCH,
                detail=f": the polytope on {n + 2} vertices has the single "
                f"triangulation {list(forced)}",
            )
        return None

    counts: dict[tuple[int, int, int], int] = {}
    for s in t.simplices:
        for f in _facets(s):
            counts[f] = counts.get(f, 0) + 1
    btris = boundary_triangles(n)
    for f in sorted(counts):
        c = counts[f]
        if f in btris:
            if c > 1:
                return TriangulationViolation(
                    OVERSHARED_FACET, facet=f, detail=f" (boundary, in {c} cells)"
                )
        elif c == 1:
            return TriangulationViolation(
                UNSHARED_FACET, facet=f, detail=" (interior, in 1 cell)"
            )
        elif c > 2:
            return TriangulationViolation(
                OVERSHARED_FACET, facet=f, detail=f" (interior, in {c} cells)"
            )
    for f in sorted(btris):
        if f not in counts:
            return TriangulationViolation(UNCOVERED_BOUNDARY, facet=f)

    hit = _first_circuit_pair(t.simplices)
    if hit is not None:
        s1, s2 = t.simplices[hit[0]], t.simplices[hit[1]]
        return TriangulationViolation(
            CIRCUIT, circuit=circuit_violation(s1, s2), simplices=(s1, s2)
        )
    return None


def internal_edges(t: Triangulation) -> set[tuple[int, int]]:
    """Edges of the triangulation that are not on the polytope boundary."""
    return t.covered_pairs() - boundary_edges(t.n)

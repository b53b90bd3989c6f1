"""Vertex-ordered graphs on 1..n and the persistence properties.

A graph here always lives on the ordered vertex set {1, ..., n}.  It is
called *persistent* when it contains the Hamilton path 1, ..., n and is
closed under two rules:

* X-property: edges {a,c} and {b,d} with a < b < c < d force the edge
  {a,d} (crossing edges span their hull);
* bar-property: every edge {a,b} with a < b-1 has a common neighbor x
  with a < x < b.

Adjacency is stored as one bitset per vertex: bit ``v`` of ``adj[u]``
is set iff {u, v} is an edge.  Index/bit 0 is unused for plain graphs
and reserved for the lower apex vertex of :class:`ExtendedGraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import ParseError

#: Hard cap so every neighborhood fits one machine word in the
#: compiled counting kernel.
MAX_VERTICES = 64

MISSING_HAMILTON_EDGE = "missing-hamilton-edge"
X_VIOLATION = "x-violation"
BAR_VIOLATION = "bar-violation"


@dataclass(frozen=True)
class PropertyViolation:
    """Witness that a graph fails one of the persistence properties.

    ``witness`` is a strictly increasing vertex tuple: ``(i, i+1)`` for a
    missing Hamilton edge, ``(a, b, c, d)`` for an X-property violation
    and ``(a, b)`` for a bar-property violation.
    """

    kind: str
    witness: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a >= b for a, b in zip(self.witness, self.witness[1:])):
            raise ValueError(f"witness must be strictly increasing: {self.witness}")

    def __str__(self) -> str:
        return f"{self.kind} at {self.witness}"


class Graph:
    """Immutable graph on the ordered vertex set {1, ..., n}.

    Construct via :meth:`from_edges`, :meth:`path`, :meth:`complete` or
    :meth:`parse`.  Values are hashable and safe to share across threads.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
        adj = [0] * (n + 1)
        for e in edges:
            u, v = e
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {e} has labels outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Graph is immutable")

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Unchecked fast constructor (internal; adj must be consistent)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, edges)

    @classmethod
    def path(cls, n: int) -> "Graph":
        """The bare Hamilton path 1 - 2 - ... - n."""
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for v in range(2, n + 1) for u in range(1, v)))

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors_mask(self, v: int) -> int:
        """Bitset of neighbors of ``v`` (bit u set iff {u,v} is an edge)."""
        return self.adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges, sorted colexicographically (by larger endpoint)."""
        out = []
        for v in range(2, self.n + 1):
            m = self.adj[v] & ((1 << v) - 1)
            while m:
                b = m & -m
                out.append((b.bit_length() - 1, v))
                m ^= b
        return out

    def non_hamilton_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.edges() if v - u > 1]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    # -- functional updates ----------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
            raise ValueError(f"bad edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_adj(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._from_adj(self.n, tuple(adj))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        extra = self.non_hamilton_edges()
        return f"Graph(n={self.n}, extra_edges={extra})"

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical record: ``n <N>`` then one ``u v`` line per edge.

        Edges are listed with u < v in colexicographic order; Hamilton
        edges are included.  Round-trips bit-exactly through
        :meth:`parse`.
        """
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Graph":
        n, rows = _parse_record(text, arity=2, kind="graph")
        return cls(n, rows)


def _parse_record(text: str, arity: int, kind: str) -> tuple[int, list[tuple]]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"empty {kind} record")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise ParseError(f"bad header line {lines[0]!r}: expected 'n <N>'")
    n = int(head[1])
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != arity:
            raise ParseError(
                f"bad {kind} line {ln!r}: expected {arity} vertex labels"
            )
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"bad {kind} line {ln!r}: labels must be integers")
        rows.append(row)
    return n, rows


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# -- persistence checks -----------------------------------------------------
#
# The raw-adjacency helpers below work on a plain list/tuple of bitsets so
# the brute-force oracle can call them in a tight loop without building
# Graph objects.


def _hamilton_missing(adj, n: int) -> Optional[int]:
    """Smallest i with {i, i+1} absent, or None."""
    for i in range(1, n):
        if not (adj[i] >> (i + 1)) & 1:
            return i
    return None


def _x_violation(adj, n: int) -> Optional[tuple[int, int, int, int]]:
    """Lexicographically smallest (a,b,c,d) violating the X-property."""
    for a in range(1, n - 2):
        na = adj[a]
        for b in range(a + 1, n - 1):
            # c runs over neighbors of a above b; d over neighbors of b
            # above c that are not neighbors of a.
            cs = na >> (b + 1)
            cb = b + 1
            while cs:
                low = cs & -cs
                c = cb + low.bit_length() - 1
                bad = (adj[b] >> (c + 1)) & ~(na >> (c + 1))
                if bad:
                    d = c + 1 + (bad & -bad).bit_length() - 1
                    return (a, b, c, d)
                cs ^= low
            # (loop over c exits without violation)
    return None


def _bar_violation(adj, n: int) -> Optional[tuple[int, int]]:
    """Colexicographically smallest edge {a,b} violating the bar-property."""
    for b in range(3, n + 1):
        m = adj[b] & ((1 << (b - 1)) - 1) & ~1  # neighbors a with a < b-1
        while m:
            low = m & -m
            a = low.bit_length() - 1
            between = ((1 << b) - 1) & ~((1 << (a + 1)) - 1)
            if not adj[a] & adj[b] & between:
                return (a, b)
            m ^= low
    return None


def has_hamilton_path(g: Graph) -> bool:
    """True iff {i, i+1} is an edge for every 1 <= i < n."""
    return _hamilton_missing(g.adj, g.n) is None


def check_x_property(g: Graph) -> Optional[PropertyViolation]:
    """None if the X-property holds, else the lex-smallest witness."""
    w = _x_violation(g.adj, g.n)
    if w is None:
        return None
    return PropertyViolation(X_VIOLATION, w)


def check_bar_property(g: Graph) -> Optional[PropertyViolation]:
    """None if the bar-property holds, else the colex-smallest bad edge."""
    w = _bar_violation(g.adj, g.n)
    if w is None:
        return None
    return PropertyViolation(BAR_VIOLATION, w)


def persistence_violation(g: Graph) -> Optional[PropertyViolation]:
    """First failing property (Hamilton path, then X, then bar), or None."""
    i = _hamilton_missing(g.adj, g.n)
    if i is not None:
        return PropertyViolation(MISSING_HAMILTON_EDGE, (i, i + 1))
    return check_x_property(g) or check_bar_property(g)


def is_persistent(g: Graph) -> bool:
    return persistence_violation(g) is None


def largest_neighbor_below(g: Graph, v: int, bound: int) -> Optional[int]:
    """max{u : u < bound and {u,v} is an edge}, or None if no such u."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} outside 1..{g.n}")
    m = g.adj[v] & ((1 << bound) - 1)
    return m.bit_length() - 1 if m else None


# -- universal-apex extension -----------------------------------------------


class ExtendedGraph:
    """A graph on 1..n extended by universal apex vertices 0 and n+1.

    Both apexes are adjacent to every other vertex; the restriction to
    1..n is the source graph.  Adding a universal vertex preserves
    persistence, so extensions of persistent graphs are persistent
    (after relabeling to 1..n+2, see :meth:`shift_labels`).
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]) -> None:
        adj = tuple(adj)
        if len(adj) != n + 2:
            raise ValueError("adjacency must cover vertices 0..n+1")
        top = n + 1
        full = (1 << (n + 2)) - 1
        if adj[0] != full & ~1 or adj[top] != full & ~(1 << top):
            raise ValueError("vertices 0 and n+1 must be universal")
        for v in range(n + 2):
            if (adj[v] >> v) & 1:
                raise ValueError(f"self-loop at {v}")
            for u in _iter_bits(adj[v]):
                if u > top or not (adj[u] >> v) & 1:
                    raise ValueError("adjacency is not symmetric")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("ExtendedGraph is immutable")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def restrict(self) -> Graph:
        """The underlying graph on 1..n."""
        strip = ~1 & ~(1 << (self.n + 1))
        return Graph._from_adj(
            self.n, (0,) + tuple(m & strip for m in self.adj[1 : self.n + 1])
        )

    def shift_labels(self) -> Graph:
        """Relabel 0..n+1 to 1..n+2 so graph-level checks apply.

        The result is a query-only value; it may exceed the enumeration
        vertex cap.
        """
        return Graph._from_adj(self.n + 2, (0,) + tuple(m << 1 for m in self.adj))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtendedGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash(("ext", self.n, self.adj))

    def __repr__(self) -> str:
        return f"ExtendedGraph(n={self.n})"


def hat(g: Graph) -> ExtendedGraph:
    """Extend ``g`` by the two universal vertices 0 and n+1."""
    n = g.n
    top = n + 1
    all_but = lambda v: ((1 << (n + 2)) - 1) & ~(1 << v)
    adj = [0] * (n + 2)
    adj[0] = all_but(0)
    adj[top] = all_but(top)
    for v in range(1, n + 1):
        adj[v] = g.adj[v] | 1 | (1 << top)
    return ExtendedGraph(n, adj)

"""Output-sensitive enumeration and exact counting of persistent graphs.

The walk processes the candidate edges (all non-Hamilton vertex pairs)
in colexicographic order.  From a working graph that is persistent up
to one possible bar-property defect at the current edge {x,k}, it
branches on that edge:

* if {x,k} is absent the subtree first enumerates every extension that
  keeps it absent (restarting at the largest neighbor of x, which the
  X-property makes the only admissible jump target), then adds the edge
  and continues as below;
* if {x,k} is present, the loop scans the middle candidates y between x
  and k: for every neighbor y of x it forces {y,k} (the bar-property
  witness), recurses, and then skips ahead so that the next candidate
  examined is the largest neighbor of y (the X-property rules out
  everything strictly in between).

The skip-ahead semantics of that loop is the one point where a naive
transcription goes wrong; ``tests/test_enumeration.py`` pins it against
the brute-force oracle.

Counting is delegated to a compiled kernel (see :mod:`cyctri._kernels`)
when available; enumeration, frame splitting and all sinks are pure
Python.  Counts are exact arbitrary-precision integers (the kernel
carries 128 bits).
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, Optional, Union

from . import _kernels
from .errors import CapExceeded
from .graphs import MAX_VERTICES, Graph

# -- colexicographic candidate-edge order -------------------------------------


def candidate_edges(n: int) -> list[tuple[int, int]]:
    """The non-Hamilton vertex pairs in colexicographic order.

    {x1,y1} precedes {x2,y2} iff y1 < y2, or y1 = y2 and x1 <= x2.
    """
    return [(x, y) for y in range(3, n + 1) for x in range(1, y - 1)]


def colex_index(n: int, edge: tuple[int, int]) -> int:
    """Position of a candidate edge in :func:`candidate_edges` order."""
    x, y = edge
    if not (1 <= x < y <= n) or y - x < 2:
        raise ValueError(f"{edge} is not a candidate edge for n={n}")
    return (y - 3) * (y - 2) // 2 + (x - 1) if y >= 3 else 0


def edge_mask(g: Graph) -> int:
    """Bitmask of the graph's non-Hamilton edges in colex bit order.

    Uniquely identifies a persistent graph of given n (Hamilton edges
    are always present); used as node id in DOT output.
    """
    mask = 0
    for i, (x, y) in enumerate(candidate_edges(g.n)):
        if g.has_edge(x, y):
            mask |= 1 << i
    return mask


# -- frames -------------------------------------------------------------------


class EnumFrame:
    """A suspended enumeration state: working graph plus position (k, x).

    The frame owns its adjacency list (bit v = vertex v).  Valid frames
    contain no candidate edge beyond {x,k} and are persistent except
    that {x,k} itself, if present, may still lack its bar-property
    witness.
    """

    __slots__ = ("n", "adj", "k", "x")

    def __init__(self, n: int, adj: list[int], k: int, x: int) -> None:
        self.n = n
        self.adj = adj
        self.k = k
        self.x = x

    @classmethod
    def start(cls, n: int) -> "EnumFrame":
        """The root frame: bare Hamilton path, positioned at edge {1,2}."""
        adj = [0] * (n + 1)
        for i in range(1, n):
            adj[i] |= 1 << (i + 1)
            adj[i + 1] |= 1 << i
        return cls(n, adj, 2, 1)

    def copy(self) -> "EnumFrame":
        return EnumFrame(self.n, list(self.adj), self.k, self.x)

    def graph(self) -> Graph:
        return Graph._from_adj(self.n, tuple(self.adj))

    def __repr__(self) -> str:
        return f"EnumFrame(n={self.n}, k={self.k}, x={self.x}, graph={self.graph()!r})"

    def invariant_violation(self) -> Optional[str]:
        """Check the frame contract; None when it holds (test helper)."""
        from .graphs import check_x_property, has_hamilton_path

        n, k, x = self.n, self.k, self.x
        if not (1 <= x < k <= n):
            return f"bad position k={k}, x={x}"
        g = self.graph()
        present = [
            e
            for e in candidate_edges(n)
            if (e[1], e[0]) > (k, x) and g.has_edge(*e)
        ]
        if present:
            return f"edges beyond ({x},{k}) present: {present}"
        if not has_hamilton_path(g):
            return "Hamilton path missing"
        xv = check_x_property(g)
        if xv is not None:
            return f"X-property fails: {xv}"
        for a, b in g.non_hamilton_edges():
            if (a, b) == (x, k):
                continue  # the current edge may still lack its witness
            if not any(g.has_edge(a, m) and g.has_edge(m, b) for m in range(a + 1, b)):
                return f"bar-property fails away from ({x},{k}): ({a}, {b})"
        return None


# -- sinks ---------------------------------------------------------------------


class Sink:
    """Streaming consumer; receives each enumerated graph exactly once."""

    def emit(self, g: Graph) -> None:  # pragma: no cover - interface
        raise NotImplementedError


class CounterSink(Sink):
    def __init__(self) -> None:
        self.count = 0

    def emit(self, g: Graph) -> None:
        self.count += 1


class CollectorSink(Sink):
    """Collects graphs in memory, guarded by a hard cap."""

    def __init__(self, cap: int = 1_000_000) -> None:
        self.cap = cap
        self.graphs: list[Graph] = []

    def emit(self, g: Graph) -> None:
        if len(self.graphs) >= self.cap:
            raise CapExceeded(f"collector cap of {self.cap} graphs exceeded")
        self.graphs.append(g)


class WriterSink(Sink):
    """Writes blank-line separated graph records to a text stream."""

    def __init__(self, stream) -> None:
        self.stream = stream
        self.count = 0

    def emit(self, g: Graph) -> None:
        self.stream.write(g.to_text())
        self.stream.write("\n")
        self.count += 1


class PredicateSink(Sink):
    """Probes every graph with a predicate and records failures."""

    def __init__(self, predicate: Callable[[Graph], bool], keep: int = 10) -> None:
        self.predicate = predicate
        self.keep = keep
        self.count = 0
        self.failures: list[Graph] = []

    def emit(self, g: Graph) -> None:
        self.count += 1
        if not self.predicate(g) and len(self.failures) < self.keep:
            self.failures.append(g)

    @property
    def ok(self) -> bool:
        return not self.failures


# -- the sequential walk -------------------------------------------------------

_TAG_ABSENT = 0  # resume after the {x,k}-absent branch: add the edge, loop
_TAG_LOOP = 1  # resume inside the candidate loop
_TAG_LOOP_UNDO = 2  # ditto, and {x,k} must be removed when the loop ends


def _walk(adj: list[int], n: int, k: int, x: int) -> Iterator[Graph]:
    """Yield all outputs of the subtree rooted at (adj, k, x).

    ``adj`` is mutated in place and restored exactly before the
    generator is exhausted.
    """
    stack: list[tuple[int, int, int, int]] = []
    mode = 0  # 0 = fresh call, 1 = candidate loop, 2 = return
    y = 0
    undo = False
    while True:
        if mode == 0:
            if x + 1 == k:
                if k == n:
                    yield Graph._from_adj(n, tuple(adj))
                    mode = 2
                else:
                    k += 1
                    x = 1
                continue
            if not (adj[x] >> k) & 1:
                stack.append((_TAG_ABSENT, k, x, 0))
                x = adj[x].bit_length() - 1  # largest neighbor of x
                continue
            y = x + 1
            undo = False
            mode = 1
            continue
        if mode == 1:
            while y < k and not (adj[x] >> y) & 1:
                y += 1
            if y < k:
                adj[y] |= 1 << k
                adj[k] |= 1 << y
                stack.append((_TAG_LOOP_UNDO if undo else _TAG_LOOP, k, x, y))
                x = y
                mode = 0
            else:
                if undo:
                    adj[x] &= ~(1 << k)
                    adj[k] &= ~(1 << x)
                mode = 2
            continue
        if not stack:
            return
        tag, k, x, y = stack.pop()
        if tag == _TAG_ABSENT:
            adj[x] |= 1 << k
            adj[k] |= 1 << x
            y = x + 1
            undo = True
        else:
            if y != k - 1:
                adj[y] &= ~(1 << k)
                adj[k] &= ~(1 << y)
            # skip ahead: the next candidate examined is exactly the
            # largest neighbor of y (do not step past it)
            y = adj[y].bit_length() - 1
            undo = tag == _TAG_LOOP_UNDO
        mode = 1


def iter_from(frame: EnumFrame) -> Iterator[Graph]:
    """All outputs of a frame's subtree, in deterministic order.

    Works on a private copy of the frame's graph.
    """
    return _walk(list(frame.adj), frame.n, frame.k, frame.x)


def iter_graphs(n: int) -> Iterator[Graph]:
    """All persistent graphs on n vertices, in enumeration order."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}, got {n}")
    if n <= 2:
        # no candidate edges at all: the path is the only output
        yield Graph.path(n)
        return
    yield from iter_from(EnumFrame.start(n))


def enumerate_from(frame: EnumFrame, sink: Sink) -> None:
    """Stream the frame's subtree into ``sink``."""
    for g in iter_from(frame):
        sink.emit(g)


def enumerate_graphs(n: int, sink: Sink) -> None:
    """Stream every persistent graph on n vertices into ``sink``."""
    for g in iter_graphs(n):
        sink.emit(g)


# -- frame splitting for parallel runs ------------------------------------------


def expand(frame: EnumFrame) -> list[Union[EnumFrame, Graph]]:
    """One level of the search tree below ``frame``.

    Returns the child frames and direct outputs in the exact order the
    sequential walk would produce them; the children's subtrees
    partition the frame's outputs.
    """
    n, k, x = frame.n, frame.k, frame.x
    adj = frame.adj
    if x + 1 == k:
        if k == n:
            return [frame.graph()]
        return [EnumFrame(n, list(adj), k + 1, 1)]
    out: list[Union[EnumFrame, Graph]] = []
    if not (adj[x] >> k) & 1:
        out.append(EnumFrame(n, list(adj), k, adj[x].bit_length() - 1))
        work = list(adj)
        work[x] |= 1 << k
        work[k] |= 1 << x
    else:
        work = list(adj)
    y = x + 1
    while y < k:
        if (work[x] >> y) & 1:
            child = list(work)
            child[y] |= 1 << k
            child[k] |= 1 << y
            out.append(EnumFrame(n, child, k, y))
            y = work[y].bit_length() - 1
        else:
            y += 1
    return out


def split_frontier(n: int, min_frames: int) -> list[Union[EnumFrame, Graph]]:
    """Expand the tree breadth-first until at least ``min_frames`` frames
    remain (or the tree is exhausted into direct outputs).

    The returned items, frames replaced by their output streams, equal
    the full enumeration stream in order.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}, got {n}")
    if n <= 2:
        return [Graph.path(n)]
    items: list[Union[EnumFrame, Graph]] = [EnumFrame.start(n)]
    while True:
        frames = sum(1 for it in items if isinstance(it, EnumFrame))
        if frames == 0 or frames >= min_frames:
            return items
        nxt: list[Union[EnumFrame, Graph]] = []
        for it in items:
            if isinstance(it, EnumFrame):
                nxt.extend(expand(it))
            else:
                nxt.append(it)
        items = nxt


# -- counting --------------------------------------------------------------------


def _count_frame(frame: EnumFrame) -> int:
    got = _kernels.count_subtree(frame.adj, frame.n, frame.k, frame.x)
    if got is not None:
        return got
    total = 0
    for _ in iter_from(frame):
        total += 1
    return total


def count(n: int) -> int:
    """Number of persistent graphs on n vertices (= triangulations of
    the cyclic polytope on n+2 vertices).  Exact integer.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}, got {n}")
    if n <= 2:
        return 1
    return _count_frame(EnumFrame.start(n))


def count_parallel(
    n: int,
    workers: int,
    frontier_factor: int = 8,
    progress: Optional[Callable[[int], None]] = None,
) -> int:
    """Same value as :func:`count`, work split across ``workers`` threads.

    The tree is expanded breadth-first to a frontier of at least
    ``frontier_factor * workers`` independent frames, each with its own
    graph copy; per-frame counts are combined by exact summation, so the
    result does not depend on scheduling.  ``progress``, when given, is
    called with the running total after each finished frame.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}, got {n}")
    if n <= 2:
        return 1
    items = split_frontier(n, max(1, frontier_factor * workers))
    frames = [it for it in items if isinstance(it, EnumFrame)]
    total = sum(1 for it in items if isinstance(it, Graph))
    lock = threading.Lock()

    def run(frame: EnumFrame) -> int:
        nonlocal total
        c = _count_frame(frame)
        with lock:
            total += c
            if progress is not None:
                progress(total)
        return c

    if not frames:
        return total
    if workers == 1 or not _kernels.kernel_available():
        for f in frames:
            run(f)
    else:
        # warm the JIT on a toy frame before fanning out
        _count_frame(EnumFrame.start(3))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, frames))
    return total

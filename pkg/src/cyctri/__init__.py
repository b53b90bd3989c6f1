"""Triangulations of 3-dimensional cyclic polytopes as persistent graphs.

The package realizes the one-to-one correspondence between the
triangulations of the cyclic polytope on n+2 vertices and the
persistent graphs on n vertices, carries bistellar flips and the flip
order over to the graph side, and enumerates/counts both families
exactly.
"""

from .errors import CapExceeded, CyctriError, NotPersistent, ParseError
from .graphs import (
    BAR_VIOLATION,
    MAX_VERTICES,
    MISSING_HAMILTON_EDGE,
    X_VIOLATION,
    ExtendedGraph,
    Graph,
    PropertyViolation,
    check_bar_property,
    check_x_property,
    has_hamilton_path,
    hat,
    is_persistent,
    largest_neighbor_below,
    persistence_violation,
)
from .triangulations import (
    CircuitPair,
    Simplex,
    Triangulation,
    TriangulationViolation,
    boundary_edges,
    boundary_triangles,
    circuit_violation,
    internal_edges,
    make_simplex,
    validate,
)
from .bijection import (
    edge_simplex,
    inner_graph,
    left_anchor,
    middle_edge,
    right_anchor,
    triangulate,
)
from .flips import (
    DEFAULT_POSET_CAP,
    FlipError,
    FlipWitness,
    down_flip,
    flip_leq,
    flip_witness,
    hasse_diagram,
    hasse_dot,
    lower_pattern,
    make_witness,
    removable_edges,
    up_flip,
    upper_pattern,
)
from .enumeration import (
    CollectorSink,
    CounterSink,
    EnumFrame,
    PredicateSink,
    Sink,
    WriterSink,
    candidate_edges,
    colex_index,
    count,
    count_parallel,
    edge_mask,
    enumerate_from,
    enumerate_graphs,
    expand,
    iter_from,
    iter_graphs,
    split_frontier,
)
from .oracle import (
    PERSISTENT_CAP,
    TRIANGULATION_CAP,
    brute_force_persistent,
    brute_force_triangulations,
)
from .files import detect_kind, load_any, parse_any

__version__ = "0.1.0"

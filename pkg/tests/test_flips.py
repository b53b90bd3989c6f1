from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from cyctri import (
    CapExceeded,
    FlipError,
    Graph,
    Triangulation,
    down_flip,
    flip_leq,
    flip_witness,
    hasse_diagram,
    hasse_dot,
    is_persistent,
    lower_pattern,
    removable_edges,
    triangulate,
    up_flip,
    upper_pattern,
)
from cyctri.enumeration import candidate_edges, edge_mask, iter_graphs


# -- the two local patterns -----------------------------------------------------


def test_patterns_on_first_five_vertices():
    w = (0, 1, 2, 3, 4)
    assert set(lower_pattern(w)) == {(0, 1, 3, 4), (0, 1, 2, 3), (1, 2, 3, 4)}
    assert set(upper_pattern(w)) == {(0, 1, 2, 4), (0, 2, 3, 4)}


def test_patterns_share_no_cell():
    for w in combinations(range(8), 5):
        assert not set(lower_pattern(w)) & set(upper_pattern(w))


def test_witness_validation():
    with pytest.raises(ValueError):
        lower_pattern((0, 1, 2, 3))
    with pytest.raises(ValueError):
        upper_pattern((0, 2, 1, 3, 4))


# -- flips ----------------------------------------------------------------------


THREE_CELL = Triangulation(3, [(0, 1, 3, 4), (0, 1, 2, 3), (1, 2, 3, 4)])
TWO_CELL = Triangulation(3, [(0, 1, 2, 4), (0, 2, 3, 4)])


def test_up_flip_minimal_polytope():
    assert up_flip(THREE_CELL, (0, 1, 2, 3, 4)) == TWO_CELL


def test_up_flip_from_triangle_image():
    assert triangulate(Graph.complete(3)) == THREE_CELL
    assert up_flip(triangulate(Graph.complete(3)), (0, 1, 2, 3, 4)) == TWO_CELL


def test_up_flip_reports_missing_cell(example7_triangulation):
    with pytest.raises(FlipError) as err:
        up_flip(example7_triangulation, (1, 3, 4, 5, 6))
    assert err.value.missing == (1, 3, 4, 5)


def test_down_flip_inverts_up_flip():
    assert down_flip(TWO_CELL, (0, 1, 2, 3, 4)) == THREE_CELL
    for n in range(3, 6):
        for g in iter_graphs(n):
            t = triangulate(g)
            for e in removable_edges(g):
                w = flip_witness(g, e)
                assert down_flip(up_flip(t, w), w) == t


def test_flip_sizes(example7_graph):
    t = triangulate(example7_graph)
    w = flip_witness(example7_graph, (1, 5))
    up = up_flip(t, w)
    assert len(up) == len(t) - 1
    assert len(down_flip(up, w)) == len(t)


# -- removable edges ---------------------------------------------------------------


def test_removable_edges_triangle():
    assert removable_edges(Graph.complete(3)) == [(1, 3)]


def test_removable_edges_example7(example7_graph):
    # removing {1,3} or {3,5} strands {1,5} without a middle neighbor
    assert removable_edges(example7_graph) == [(1, 5)]


def test_removable_edges_path():
    for n in range(1, 7):
        assert removable_edges(Graph.path(n)) == []


def test_removals_match_pointwise_persistence(enumerated):
    for n in range(3, 7):
        for g in enumerated[n]:
            expected = [
                e
                for e in g.non_hamilton_edges()
                if is_persistent(g.without_edge(*e))
            ]
            assert removable_edges(g) == expected


# -- flip witnesses ------------------------------------------------------------------


def test_flip_witness_example7(example7_graph):
    assert flip_witness(example7_graph, (1, 5)) == (0, 1, 3, 5, 6)


def test_flip_witness_requires_unique_middle():
    # in the complete graph on 4 vertices, {1,4} has two middle
    # neighbors, and indeed its removal breaks the X-property
    k4 = Graph.complete(4)
    assert (1, 4) not in removable_edges(k4)
    with pytest.raises(ValueError):
        flip_witness(k4, (1, 4))


def test_flip_matches_edge_removal(enumerated):
    # removing a removable edge is exactly one up-flip of the image
    for n in range(3, 7):
        for g in enumerated[n]:
            t = triangulate(g)
            for e in removable_edges(g):
                w = flip_witness(g, e)
                assert up_flip(t, w) == triangulate(g.without_edge(*e))


def test_every_up_flip_is_an_edge_removal(enumerated):
    # scan all five-vertex witnesses; valid up-flips biject with
    # removable edges via the middle pair {v2, v4}
    for n in range(3, 7):
        for g in enumerated[n]:
            t = triangulate(g)
            cells = set(t.simplices)
            hits = {}
            for w in combinations(range(n + 2), 5):
                if set(lower_pattern(w)) <= cells:
                    hits[w] = (w[1], w[3])
            assert sorted(hits.values(), key=lambda e: (e[1], e[0])) == removable_edges(g)
            for w, e in hits.items():
                assert flip_witness(g, e) == w
                assert up_flip(t, w) == triangulate(g.without_edge(*e))


# -- the flip order ---------------------------------------------------------------------


def test_flip_leq_extremes():
    for n in range(2, 7):
        k, p = Graph.complete(n), Graph.path(n)
        assert flip_leq(k, p)
        assert not flip_leq(p, k) or n <= 2


def test_flip_leq_example7(example7_graph):
    smaller = Graph(5, [(i, i + 1) for i in range(1, 5)] + [(1, 3), (3, 5)])
    assert is_persistent(smaller)
    assert flip_leq(example7_graph, smaller)
    assert not flip_leq(smaller, example7_graph)


def test_flip_leq_needs_matching_sizes():
    with pytest.raises(ValueError):
        flip_leq(Graph.path(3), Graph.path(4))


@given(data=st.data())
def test_flip_leq_is_a_partial_order(data, enumerated):
    n = data.draw(st.integers(min_value=3, max_value=5))
    pool = enumerated[n]
    g1 = data.draw(st.sampled_from(pool))
    g2 = data.draw(st.sampled_from(pool))
    g3 = data.draw(st.sampled_from(pool))
    assert flip_leq(g1, g1)
    if flip_leq(g1, g2) and flip_leq(g2, g1):
        assert g1 == g2
    if flip_leq(g1, g2) and flip_leq(g2, g3):
        assert flip_leq(g1, g3)


# -- Hasse diagram ------------------------------------------------------------------------


def test_hasse_n3():
    assert hasse_diagram(3) == [(Graph.complete(3), Graph.path(3))]


def test_hasse_n4_matches_deletion_scan(enumerated):
    covers = hasse_diagram(4)
    expected = set()
    for g in enumerated[4]:
        for e in g.non_hamilton_edges():
            h = g.without_edge(*e)
            if is_persistent(h):
                expected.add((g, h))
    assert set(covers) == expected
    assert len(covers) == len(expected)


def test_hasse_cap():
    with pytest.raises(CapExceeded):
        hasse_diagram(9)
    with pytest.raises(CapExceeded):
        hasse_diagram(5, cap=4)
    assert hasse_diagram(4, cap=4)


def test_poset_unique_extremes(enumerated):
    for n in range(2, 7):
        pool = enumerated[n]
        kn, pn = Graph.complete(n), Graph.path(n)
        minima = [g for g in pool if all(flip_leq(g, h) for h in pool)]
        maxima = [g for g in pool if all(flip_leq(h, g) for h in pool)]
        assert minima == [kn]
        assert maxima == [pn]


def test_poset_is_graded(enumerated):
    # covers drop exactly one edge; every strict comparability of gap
    # >= 2 passes through an intermediate element; no element other
    # than the extremes is a dead end.  Together: every maximal chain
    # runs from the complete graph to the path and has length
    # C(n,2) - (n-1).
    for n in range(3, 7):
        pool = enumerated[n]
        kn, pn = Graph.complete(n), Graph.path(n)
        for g in pool:
            if g != pn:
                assert removable_edges(g), g
            if g != kn:
                addable = [
                    e
                    for e in candidate_edges(n)
                    if not g.has_edge(*e) and is_persistent(g.with_edge(*e))
                ]
                assert addable, g
        for g in pool:
            for h in pool:
                gap = g.edge_count() - h.edge_count()
                if gap >= 2 and flip_leq(g, h):
                    steps = [
                        e for e in removable_edges(g) if flip_leq(g.without_edge(*e), h)
                    ]
                    assert steps, (g, h)


def test_maximal_chain_length_by_walk(enumerated):
    # walk any maximal chain greedily; each cover removes one edge
    for n in range(3, 7):
        g = Graph.complete(n)
        steps = 0
        while True:
            r = removable_edges(g)
            if not r:
                break
            g = g.without_edge(*r[0])
            steps += 1
        assert g == Graph.path(n)
        assert steps == n * (n - 1) // 2 - (n - 1)


# -- DOT output ------------------------------------------------------------------------------


def test_hasse_dot_shape():
    dot = hasse_dot(4)
    assert dot.startswith("digraph")
    assert dot == hasse_dot(4)  # deterministic
    graphs = list(iter_graphs(4))
    for g in graphs:
        assert f'"{edge_mask(g):x}" [label="{g.edge_count()}"]' in dot
    assert dot.count("->") == len(hasse_diagram(4))
    assert dot.count("rank=same") == len({g.edge_count() for g in graphs})

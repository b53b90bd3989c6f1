from __future__ import annotations

import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from cyctri.cli import main
from cyctri.files import detect_kind, parse_any
from cyctri.graphs import Graph
from cyctri.triangulations import Triangulation
from cyctri.errors import ParseError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture()
def example7_file(tmp_path, example7_triangulation):
    p = tmp_path / "example7.tri"
    p.write_text(example7_triangulation.to_text())
    return str(p)


@pytest.fixture()
def example7_graph_file(tmp_path, example7_graph):
    p = tmp_path / "example7.graph"
    p.write_text(example7_graph.to_text())
    return str(p)


# -- kind detection ------------------------------------------------------------


def test_detect_kind():
    assert detect_kind("n 4\n1 2\n") == "graph"
    assert detect_kind("n 4\n0 1 2 3\n") == "triangulation"
    assert detect_kind("n 1\n") == "graph"
    for text in ("", "x 4\n", "n 4\n1 2 3\n"):
        with pytest.raises(ParseError):
            detect_kind(text)


def test_parse_any(example7_triangulation, example7_graph):
    assert parse_any(example7_triangulation.to_text()) == example7_triangulation
    assert parse_any(example7_graph.to_text()) == example7_graph


# -- count ----------------------------------------------------------------------


def test_count_prints_plain_decimal():
    code, out, _ = run("count", "10")
    assert code == 0
    assert out == "1119280\n"


def test_count_check_against_reference():
    code, out, err = run("count", "7", "--check")
    assert code == 0
    assert out == "972\n"
    assert "check ok" in err


def test_count_threads_agree():
    c1 = run("count", "9", "--threads", "1")
    c8 = run("count", "9", "--threads", "8")
    assert c1[0] == c8[0] == 0
    assert c1[1] == c8[1] == "89405\n"


def test_count_rejects_bad_n():
    code, _, err = run("count", "65")
    assert code == 2
    assert "error" in err


# -- enumerate ---------------------------------------------------------------------


def test_enumerate_stdout():
    code, out, _ = run("enumerate", "3")
    assert code == 0
    assert out == "n 3\n1 2\n2 3\n\nn 3\n1 2\n1 3\n2 3\n\n"


def test_enumerate_to_file(tmp_path):
    target = tmp_path / "graphs.txt"
    code, out, _ = run("enumerate", "5", "--out", str(target), "--deterministic")
    assert code == 0 and out == ""
    records = [r for r in target.read_text().split("\n\n") if r.strip()]
    assert len(records) == 25
    parsed = [Graph.parse(r) for r in records]
    assert len(set(parsed)) == 25


# -- validate ----------------------------------------------------------------------


def test_validate_example7(example7_file):
    code, out, _ = run("validate", example7_file)
    assert code == 0 and out.startswith("ok")


def test_validate_graph(example7_graph_file):
    code, out, _ = run("validate", example7_graph_file)
    assert code == 0 and "persistent" in out


def test_validate_bad_graph(tmp_path):
    p = tmp_path / "bad.graph"
    p.write_text(Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).to_text())
    code, out, _ = run("validate", str(p))
    assert code == 1
    assert "bar-violation" in out and "(1, 4)" in out


def test_validate_broken_triangulation(tmp_path, example7_triangulation):
    cells = [s for s in example7_triangulation if s != (1, 3, 5, 6)]
    p = tmp_path / "broken.tri"
    p.write_text(Triangulation(5, cells).to_text())
    code, out, _ = run("validate", str(p))
    assert code == 1
    assert "unshared-facet" in out and "(1, 3, 5)" in out


def test_validate_malformed_file(tmp_path):
    p = tmp_path / "junk.txt"
    p.write_text("whatever\n")
    code, _, err = run("validate", str(p))
    assert code == 2 and "error" in err


def test_validate_missing_file():
    code, _, err = run("validate", "/nonexistent/file.graph")
    assert code == 2


# -- map ----------------------------------------------------------------------------


def test_map_round_trip(example7_file, example7_triangulation, tmp_path):
    code, graph_text, _ = run("map", example7_file)
    assert code == 0
    gpath = tmp_path / "mapped.graph"
    gpath.write_text(graph_text)
    code, tri_text, _ = run("map", str(gpath))
    assert code == 0
    assert tri_text == example7_triangulation.to_text()


def test_map_writes_file(example7_graph_file, example7_triangulation, tmp_path):
    target = tmp_path / "image.tri"
    code, out, _ = run("map", example7_graph_file, "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == example7_triangulation.to_text()


def test_map_rejects_non_persistent(tmp_path):
    p = tmp_path / "bad.graph"
    p.write_text(Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).to_text())
    code, _, err = run("map", str(p))
    assert code == 1


def test_map_rejects_invalid_triangulation(tmp_path, example7_triangulation):
    cells = [s for s in example7_triangulation if s != (1, 3, 5, 6)]
    p = tmp_path / "broken.tri"
    p.write_text(Triangulation(5, cells).to_text())
    code, _, err = run("map", str(p))
    assert code == 1


# -- flips ------------------------------------------------------------------------------


def test_flips_lists_removable_edges(example7_graph_file):
    code, out, _ = run("flips", example7_graph_file)
    assert code == 0
    assert out == "1 5\n"


def test_flips_with_witnesses(example7_graph_file):
    code, out, _ = run("flips", example7_graph_file, "--witnesses")
    assert code == 0
    assert out == "1 5  witness: 0 1 3 5 6\n"


def test_flips_accepts_triangulation_input(example7_file):
    code, out, _ = run("flips", example7_file)
    assert code == 0 and out == "1 5\n"


# -- poset ---------------------------------------------------------------------------------


def test_poset_text():
    code, out, _ = run("poset", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n 3 graphs 2 covers 1"
    assert lines[1] == "1 0"


def test_poset_dot(tmp_path):
    target = tmp_path / "poset.dot"
    code, _, _ = run("poset", "4", "--dot", str(target))
    assert code == 0
    dot = target.read_text()
    assert dot.startswith("digraph") and dot.count("->") == 6


def test_poset_cap():
    code, _, err = run("poset", "9")
    assert code == 3 and "capped" in err
    code, _, _ = run("poset", "5", "--cap", "4")
    assert code == 3


# -- oracle-check ------------------------------------------------------------------------------


def test_oracle_check_small():
    code, out, _ = run("oracle-check", "4")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_oracle_check_skips_triangulations_beyond_cap():
    code, out, _ = run("oracle-check", "5")
    assert code == 0
    assert "skipped" in out


def test_oracle_check_cap():
    code, _, err = run("oracle-check", "9")
    assert code == 3 and "capped" in err


# -- shipped reference data ---------------------------------------------------------------------


def test_reference_fixture_matches_known_counts():
    from cyctri.cli import _reference_counts
    from conftest import KNOWN_COUNTS

    assert _reference_counts() == {n: KNOWN_COUNTS[n] for n in range(1, 14)}

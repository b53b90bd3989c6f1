"""Loading graph and triangulation files with kind auto-detection.

Both formats start with a header line ``n <N>``; record lines have two
columns for graphs (edges) and four for triangulations (cells).  A
header-only file is read as a graph (for n = 1 the empty graph and the
empty triangulation are the same object under the bijection, so nothing
is lost).
"""

from __future__ import annotations

from typing import Union

from .errors import ParseError
from .graphs import Graph
from .triangulations import Triangulation

Record = Union[Graph, Triangulation]


def detect_kind(text: str) -> str:
    """'graph' or 'triangulation', by header plus record arity."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise ParseError(f"bad header line {lines[0]!r}: expected 'n <N>'")
    if len(lines) == 1:
        return "graph"
    width = len(lines[1].split())
    if width == 2:
        return "graph"
    if width == 4:
        return "triangulation"
    raise ParseError(
        f"record line {lines[1]!r} has {width} columns; expected 2 (graph) or 4 "
        "(triangulation)"
    )


def parse_any(text: str) -> Record:
    if detect_kind(text) == "graph":
        return Graph.parse(text)
    return Triangulation.parse(text)


def load_any(path: str) -> Record:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_any(text)

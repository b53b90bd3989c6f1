"""Command-line interface.

Subcommands:

* ``count n [--threads T] [--check]``: print the exact number of
  persistent graphs on n vertices.
* ``enumerate n [--out F] [--deterministic]``: stream all graph records.
* ``validate F``: check a graph or triangulation file.
* ``map F [--out G]``: apply the bijection in whichever direction the
  input calls for.
* ``flips F [--witnesses]``: removable edges (and flip witnesses).
* ``poset n [--dot F] [--cap C]``: the flip-order Hasse diagram.
* ``oracle-check n``: compare fast paths against the brute-force oracle.

Exit codes: 0 success, 1 property violation, 2 malformed input,
3 cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from . import bijection, enumeration, files, flips, oracle
from .errors import CapExceeded, NotPersistent, ParseError
from .graphs import Graph, persistence_violation
from .triangulations import Triangulation, validate

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_CAP = 3

PROGRESS_STRIDE = 1 << 30


def _reference_counts() -> dict[int, int]:
    text = (
        resources.files("cyctri").joinpath("data/triangulation_counts.txt").read_text()
    )
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, c = line.split()
        out[int(n)] = int(c)
    return out


def _cmd_count(args) -> int:
    marks = {"last": 0}

    def progress(total: int) -> None:
        if total // PROGRESS_STRIDE > marks["last"]:
            marks["last"] = total // PROGRESS_STRIDE
            print(f"... {total} graphs", file=sys.stderr)

    value = enumeration.count_parallel(args.n, args.threads, progress=progress)
    print(value)
    if args.check:
        reference = _reference_counts()
        if args.n not in reference:
            print(f"no reference count for n={args.n}", file=sys.stderr)
            return EXIT_CAP
        if reference[args.n] != value:
            print(
                f"MISMATCH: computed {value}, reference {reference[args.n]}",
                file=sys.stderr,
            )
            return EXIT_VIOLATION
        print(f"check ok: matches reference for n={args.n}", file=sys.stderr)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    # the sequential walk is already deterministic; --deterministic is
    # accepted so scripted callers can insist on it
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        sink = enumeration.WriterSink(out)
        emitted = 0
        for g in enumeration.iter_graphs(args.n):
            sink.emit(g)
            emitted += 1
            if emitted % PROGRESS_STRIDE == 0:
                print(f"... {emitted} graphs", file=sys.stderr)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def _cmd_validate(args) -> int:
    record = files.load_any(args.file)
    if isinstance(record, Graph):
        violation = persistence_violation(record)
        if violation is not None:
            print(f"graph: {violation}")
            return EXIT_VIOLATION
        print(f"ok: persistent graph on {record.n} vertices")
        return EXIT_OK
    report = validate(record)
    if report is not None:
        print(f"triangulation: {report}")
        return EXIT_VIOLATION
    print(
        f"ok: triangulation of the cyclic polytope on {record.n + 2} vertices "
        f"({len(record)} cells)"
    )
    return EXIT_OK


def _cmd_map(args) -> int:
    record = files.load_any(args.file)
    if isinstance(record, Graph):
        result = bijection.triangulate(record)
    else:
        report = validate(record)
        if report is not None:
            print(f"triangulation: {report}", file=sys.stderr)
            return EXIT_VIOLATION
        result = bijection.inner_graph(record)
    text = result.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_flips(args) -> int:
    record = files.load_any(args.file)
    if isinstance(record, Triangulation):
        report = validate(record)
        if report is not None:
            print(f"triangulation: {report}", file=sys.stderr)
            return EXIT_VIOLATION
        g = bijection.inner_graph(record)
    else:
        g = record
        violation = persistence_violation(g)
        if violation is not None:
            print(f"graph: {violation}", file=sys.stderr)
            return EXIT_VIOLATION
    for e in flips.removable_edges(g):
        if args.witnesses:
            w = flips.flip_witness(g, e)
            print(f"{e[0]} {e[1]}  witness: {' '.join(map(str, w))}")
        else:
            print(f"{e[0]} {e[1]}")
    return EXIT_OK


def _cmd_poset(args) -> int:
    if args.dot:
        text = flips.hasse_dot(args.n, cap=args.cap)
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(text)
        return EXIT_OK
    covers = flips.hasse_diagram(args.n, cap=args.cap)
    graphs = sum(1 for _ in enumeration.iter_graphs(args.n))
    print(f"n {args.n} graphs {graphs} covers {len(covers)}")
    for g, h in covers:
        print(f"{enumeration.edge_mask(g):x} {enumeration.edge_mask(h):x}")
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    n = args.n
    failures = 0

    def report(name: str, ok: bool) -> None:
        nonlocal failures
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            failures += 1

    reference = oracle.brute_force_persistent(n)
    fast = list(enumeration.iter_graphs(n))
    report("graph-count", len(reference) == enumeration.count(n) == len(fast))
    report("graph-set", set(reference) == set(fast))
    if n <= oracle.TRIANGULATION_CAP:
        tris = oracle.brute_force_triangulations(n)
        report("triangulation-count", len(tris) == len(reference))
        report(
            "bijection-pairing",
            {bijection.inner_graph(t) for t in tris} == set(reference)
            and all(bijection.triangulate(bijection.inner_graph(t)) == t for t in tris),
        )
    else:
        print(f"triangulation oracle skipped (capped at n={oracle.TRIANGULATION_CAP})")
    return EXIT_OK if failures == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyctri",
        description="Triangulations of 3-dimensional cyclic polytopes as "
        "persistent graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count persistent graphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--check", action="store_true", help="compare against the shipped reference table")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("enumerate", help="stream all persistent graphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--out", help="write records to a file instead of stdout")
    p.add_argument("--deterministic", action="store_true", help="force deterministic emission order (always on)")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("validate", help="validate a graph or triangulation file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("map", help="apply the bijection to a graph or triangulation file")
    p.add_argument("file")
    p.add_argument("--out", help="write the image to a file instead of stdout")
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("flips", help="list removable edges of a persistent graph")
    p.add_argument("file")
    p.add_argument("--witnesses", action="store_true", help="also print the five-vertex flip witnesses")
    p.set_defaults(fn=_cmd_flips)

    p = sub.add_parser("poset", help="emit the flip-order Hasse diagram")
    p.add_argument("n", type=int)
    p.add_argument("--dot", help="write DOT to this file")
    p.add_argument("--cap", type=int, default=flips.DEFAULT_POSET_CAP)
    p.set_defaults(fn=_cmd_poset)

    p = sub.add_parser("oracle-check", help="compare fast paths against brute force")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotPersistent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:  # console_scripts hook
    sys.exit(main())

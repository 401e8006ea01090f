"""``knodel`` command line.

Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters,
3 I/O failure, 4 closed form forced outside its regime.
"""
from __future__ import annotations

import argparse
import contextlib
import logging
import sys

from .core import InvalidParameters, KnodelError, Part, Vertex, new_graph
from .distance import RegimeNotApplicable, diameter, dist
from .io import SinkFailure, export_graph, write_report, write_table1
from .sweep import DEFAULT_MAX_FEASIBLE_DELTA, sweep_cells, table1_rows

log = logging.getLogger("knodel")

EXIT_OK, EXIT_MISMATCH, EXIT_PARAMS, EXIT_IO, EXIT_REGIME = 0, 1, 2, 3, 4


def parse_vertex(spec: str) -> Vertex:
    part, sep, idx = spec.partition(":")
    if not sep or part not in ("u", "v") or not idx.isdigit():
        raise argparse.ArgumentTypeError(f"expected u:<j> or v:<j>, got {spec!r}")
    return Vertex(Part(part), int(idx))


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


@contextlib.contextmanager
def _open_sink(path: str | None):
    if path in (None, "-"):
        yield sys.stdout.buffer
        return
    try:
        fh = open(path, "wb")
    except OSError as exc:
        raise SinkFailure(str(exc)) from exc
    with fh:
        yield fh


def cmd_gen(args) -> int:
    g = new_graph(args.delta, args.n)
    with _open_sink(args.out) as sink:
        export_graph(g, args.format, sink)
    return EXIT_OK


def cmd_dist(args) -> int:
    g = new_graph(args.delta, args.n)
    x = g.vertex(args.src.part, args.src.index)
    y = g.vertex(args.dst.part, args.dst.index)
    res = dist(g, x, y, method=args.method, witness=args.witness)
    print(f"distance={res.value} method={res.method}")
    if args.witness:
        print(res.witness)
    return EXIT_OK


def cmd_diam(args) -> int:
    g = new_graph(args.delta, args.n)
    res = diameter(g, args.method)
    print(f"diameter={res.value} method={res.method}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ns = range(args.n_range.start, args.n_range.stop, args.step)
    skip = lambda d, n, why: log.info("skip W(%d,%d): %s", d, n, why)  # noqa: E731
    results = sweep_cells(args.delta_range, ns, jobs=args.jobs, on_skip=skip)
    with _open_sink(args.out) as sink:
        write_report([r.row for r in results], args.report, sink)
    problems = [p for r in results for p in r.problems]
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    log.info("%d rows, %d problems", len(results), len(problems))
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_table1(args) -> int:
    if args.max_delta < 3:
        raise InvalidParameters("--max-delta must be >= 3")
    rows = table1_rows(args.max_delta, args.feasible_delta)
    with _open_sink(args.out) as sink:
        write_table1(rows, args.report, sink)
    bad = [r for r in rows if r.status == "mismatch"]
    for r in bad:
        print(f"mismatch: {r.family} D={r.delta}: bfs {r.bfs_diam} != {r.expected}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knodel", description="Knödel graph distances and diameters")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp):
        sp.add_argument("--delta", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("gen", help="export a graph")
    graph_args(sp)
    sp.add_argument("--format", choices=["edgelist", "dimacs", "dot"], default="edgelist")
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("dist", help="distance between two vertices")
    graph_args(sp)
    sp.add_argument("--from", dest="src", type=parse_vertex, required=True)
    sp.add_argument("--to", dest="dst", type=parse_vertex, required=True)
    sp.add_argument("--method", choices=["auto", "closed", "bfs"], default="auto")
    sp.add_argument("--witness", action="store_true", help="print a shortest walk")
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("diam", help="diameter")
    graph_args(sp)
    sp.add_argument("--method", choices=["auto", "formula", "bfs"], default="auto")
    sp.set_defaults(func=cmd_diam)

    sp = sub.add_parser("verify", help="sweep parameters and compare formula with BFS")
    sp.add_argument("--delta-range", type=parse_range, required=True)
    sp.add_argument("--n-range", type=parse_range, required=True)
    sp.add_argument("--step", type=int, default=2)
    sp.add_argument("--report", choices=["csv", "json"], default="csv")
    sp.add_argument("--out", default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table1", help="check the tabulated special-case diameters")
    sp.add_argument("--max-delta", type=int, default=12)
    sp.add_argument("--feasible-delta", type=int, default=DEFAULT_MAX_FEASIBLE_DELTA)
    sp.add_argument("--report", choices=["csv", "json"], default="csv")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_table1)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InvalidParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except SinkFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except RegimeNotApplicable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except KnodelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())

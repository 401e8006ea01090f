"""Graph export (edge list, DIMACS, DOT) and verification reports (CSV, JSON).

All writers emit bytes with ``\\n`` line endings and a trailing newline.
"""
from __future__ import annotations

import csv
import enum
import io as _io
import json
from dataclasses import asdict, dataclass, fields
from typing import BinaryIO, Iterable

from .core import KnodelError, KnodelGraph


class SinkFailure(KnodelError, OSError):
    pass


class GraphFormat(enum.Enum):
    EDGELIST = "edgelist"
    DIMACS = "dimacs"
    DOT = "dot"


class ReportFormat(enum.Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class ReportRow:
    delta: int
    n: int
    formula_diam: int | None
    bfs_diam: int
    gh_lower: int
    gh_upper: int
    in_regime: bool
    elapsed_micros: int

    @property
    def match(self) -> bool:
        return self.formula_diam is not None and self.formula_diam == self.bfs_diam

    @property
    def sandwiched(self) -> bool:
        return self.gh_lower <= self.bfs_diam <= self.gh_upper

    def as_dict(self) -> dict:
        d = asdict(self)
        d["match"] = self.match
        return {k: d[k] for k in REPORT_COLUMNS}


REPORT_COLUMNS = (
    "delta", "n", "formula_diam", "bfs_diam", "gh_lower", "gh_upper",
    "in_regime", "match", "elapsed_micros",
)


@dataclass(frozen=True)
class Table1Row:
    family: str
    delta: int
    graph_delta: int
    n: int
    bfs_diam: int | None
    expected: int
    status: str  # "ok", "mismatch" or "skipped"


TABLE1_COLUMNS = tuple(f.name for f in fields(Table1Row))


def _write(sink: BinaryIO, text: str) -> None:
    try:
        sink.write(text.encode())
        sink.flush()
    except (OSError, ValueError) as exc:
        raise SinkFailure(str(exc)) from exc


def export_graph(g: KnodelGraph, fmt: GraphFormat | str, sink: BinaryIO) -> None:
    fmt = GraphFormat(fmt)
    edges = g.edges()
    if fmt is GraphFormat.EDGELIST:
        lines = [f"# knodel delta={g.delta} n={g.n}"]
        lines += [f"{a} {b}" for a, b in edges]
    elif fmt is GraphFormat.DIMACS:
        lines = [f"p edge {g.n} {len(edges)}"]
        lines += [f"e {a + 1} {b + 1}" for a, b in edges]
    else:
        lines = [f"graph knodel_{g.delta}_{g.n} {{"]
        lines += [f"  u{a} -- v{b - g.half};" for a, b in edges]
        lines.append("}")
    _write(sink, "\n".join(lines) + "\n")


def read_edgelist(source: BinaryIO) -> tuple[int, int, list[tuple[int, int]]]:
    """Parse :func:`export_graph` edge-list output into ``(delta, n, edges)``."""
    text = source.read().decode()
    header, *rest = text.splitlines()
    if not header.startswith("# knodel "):
        raise ValueError(f"not a knodel edge list: {header!r}")
    params = dict(item.split("=") for item in header[len("# knodel "):].split())
    edges = [tuple(int(t) for t in line.split()) for line in rest if line.strip()]
    return int(params["delta"]), int(params["n"]), edges


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _write_table(rows: list[dict], columns, fmt: ReportFormat | str, sink: BinaryIO) -> None:
    fmt = ReportFormat(fmt)
    if fmt is ReportFormat.JSON:
        _write(sink, json.dumps(rows, indent=1) + "\n")
        return
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt_cell(row[c]) for c in columns])
    _write(sink, buf.getvalue())


def write_report(rows: Iterable[ReportRow], fmt: ReportFormat | str, sink: BinaryIO) -> None:
    _write_table([r.as_dict() for r in rows], REPORT_COLUMNS, fmt, sink)


def write_table1(rows: Iterable[Table1Row], fmt: ReportFormat | str, sink: BinaryIO) -> None:
    _write_table([asdict(r) for r in rows], TABLE1_COLUMNS, fmt, sink)

"""Parameter sweeps that check the closed forms against BFS."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .core import KnodelGraph, new_graph
from .distance import ceil_div, diameter_formula, diametral_pair, gh_bounds, regime
from .io import ReportRow, Table1Row
from .oracle import eccentricity_u0

# BFS stays cheap up to 2^14 + 2^13 vertices
DEFAULT_MAX_FEASIBLE_DELTA = 14


@dataclass(frozen=True)
class CellResult:
    row: ReportRow
    problems: tuple[str, ...]


def in_family(delta: int, n: int) -> bool:
    return n >= 2 and n % 2 == 0 and delta >= 1 and (1 << delta) <= n


def verify_cell(delta: int, n: int) -> CellResult:
    g = new_graph(delta, n)
    t0 = time.perf_counter()
    bfs_diam = eccentricity_u0(g)
    in_regime = regime(g).diam_formula_ok
    formula = diameter_formula(g).value if in_regime else None
    pair = diametral_pair(g).value if in_regime else None
    lo, hi = gh_bounds(g)
    elapsed = int((time.perf_counter() - t0) * 1e6)
    row = ReportRow(delta, n, formula, bfs_diam, lo, hi, in_regime, elapsed)
    problems = []
    if in_regime and not row.match:
        problems.append(f"W({delta},{n}): formula {formula} != bfs {bfs_diam}")
    if in_regime and pair != bfs_diam:
        problems.append(f"W({delta},{n}): diametral pair {pair} != bfs {bfs_diam}")
    if not row.sandwiched:
        problems.append(f"W({delta},{n}): bfs {bfs_diam} outside bounds [{lo}, {hi}]")
    return CellResult(row, tuple(problems))


def _verify_pair(pair):
    return verify_cell(*pair)


def sweep_cells(deltas, ns, *, jobs: int = 1, on_skip: Callable[[int, int, str], None] | None = None) -> list[CellResult]:
    """Verify every in-family ``(delta, n)``; results are ordered by ``(delta, n)``."""
    cells = []
    for delta in deltas:
        for n in ns:
            if not in_family(delta, n):
                reason = "odd n" if n % 2 else "2^delta > n"
                if delta < 1:
                    reason = "delta < 1"
            elif delta < 2:
                reason = "delta < 2 has no diameter bounds"
            else:
                cells.append((delta, n))
                continue
            if on_skip:
                on_skip(delta, n, reason)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_pair, cells, chunksize=8))
    return [verify_cell(d, n) for d, n in cells]


@dataclass(frozen=True)
class Family:
    name: str
    graph_delta: Callable[[int], int]
    order: Callable[[int], int]
    expected: Callable[[int], int]
    min_delta: int


TABLE1_FAMILIES = (
    Family("W(D-1,2^D-2)", lambda d: d - 1, lambda d: (1 << d) - 2, lambda d: ceil_div(d + 2, 2), 3),
    Family("W(D-1,2^D)", lambda d: d - 1, lambda d: 1 << d, lambda d: ceil_div(d + 2, 2), 5),
    Family("W(D,2^D+2)", lambda d: d, lambda d: (1 << d) + 2, lambda d: (d + 2) // 2, 4),
    Family("W(D,2^D+4)", lambda d: d, lambda d: (1 << d) + 4, lambda d: ceil_div(d + 2, 2), 5),
    Family("W(D,2^D+2^(D-1)-2)", lambda d: d, lambda d: (1 << d) + (1 << (d - 1)) - 2, lambda d: ceil_div(d + 2, 2), 3),
)
FERTIN = Family("W(D,2^D)", lambda d: d, lambda d: 1 << d, lambda d: 1 + ceil_div(d, 2), 3)


def table1_rows(max_delta: int, feasible_delta: int = DEFAULT_MAX_FEASIBLE_DELTA) -> list[Table1Row]:
    """Tabulated diameters against BFS, plus the ``W(D, 2^D)`` family."""
    rows = []
    for fam in TABLE1_FAMILIES + (FERTIN,):
        for d in range(fam.min_delta, max_delta + 1):
            gd, n, want = fam.graph_delta(d), fam.order(d), fam.expected(d)
            if d > feasible_delta:
                rows.append(Table1Row(fam.name, d, gd, n, None, want, "skipped"))
                continue
            got = eccentricity_u0(KnodelGraph(gd, n))
            rows.append(Table1Row(fam.name, d, gd, n, got, want, "ok" if got == want else "mismatch"))
    return rows

"""Brute-force ground truth built on adjacency alone.

Nothing here consults the closed forms in :mod:`knodel.distance`; keep it
that way, the two are checked against each other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .core import KnodelError, KnodelGraph, Vertex, _check, neighbors

UNREACHABLE = -1


class Disconnected(KnodelError):
    pass


class DiameterMode(enum.Enum):
    TRANSITIVE_SINGLE_SOURCE = "single-source"
    ALL_PAIRS = "all-pairs"


@dataclass(frozen=True, eq=False)
class DistanceTable:
    """BFS distances from ``source``, indexed by flat vertex id."""

    graph: KnodelGraph
    source: Vertex
    dist: np.ndarray

    def __getitem__(self, x: Vertex) -> int:
        return int(self.dist[self.graph.flat_id(x)])

    def u_distances(self) -> np.ndarray:
        return self.dist[: self.graph.half]

    def v_distances(self) -> np.ndarray:
        return self.dist[self.graph.half :]

    def parent(self, x: Vertex) -> Vertex | None:
        """Lowest-flat-id neighbour one step closer to the source."""
        d = self[x]
        if d <= 0:
            return None
        closer = [y for y in neighbors(self.graph, x) if self[y] == d - 1]
        return min(closer, key=self.graph.flat_id)

    def path_to(self, target: Vertex) -> list[Vertex]:
        if self[target] == UNREACHABLE:
            raise Disconnected(f"{target} unreachable from {self.source}")
        path = [target]
        while path[-1] != self.source:
            path.append(self.parent(path[-1]))
        return path[::-1]


def bfs_from(g: KnodelGraph, source: Vertex) -> DistanceTable:
    _check(g, source)
    dist = _kernel.bfs(g.half, g.offsets_array(), g.flat_id(source))
    dist.setflags(write=False)
    return DistanceTable(g, source, dist)


def eccentricity_u0(g: KnodelGraph) -> int:
    dist = bfs_from(g, g.u(0)).dist
    if dist.min() == UNREACHABLE:
        raise Disconnected(f"W({g.delta},{g.n}) is disconnected")
    return int(dist.max())


@dataclass(frozen=True)
class DiameterResult:
    value: int
    method: str
    witness_pair: tuple[Vertex, Vertex] | None = None


def diameter_exact(g: KnodelGraph, mode: DiameterMode = DiameterMode.TRANSITIVE_SINGLE_SOURCE) -> DiameterResult:
    if mode is DiameterMode.TRANSITIVE_SINGLE_SOURCE:
        table = bfs_from(g, g.u(0))
        if table.dist.min() == UNREACHABLE:
            raise Disconnected(f"W({g.delta},{g.n}) is disconnected")
        far = g.from_flat(int(np.argmax(table.dist)))
        return DiameterResult(int(table.dist.max()), "bfs", (g.u(0), far))
    value = _kernel.all_pairs_max(g.half, g.offsets_array())
    if value == UNREACHABLE:
        raise Disconnected(f"W({g.delta},{g.n}) is disconnected")
    return DiameterResult(int(value), "bfs")

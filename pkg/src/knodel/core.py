"""Knödel graph model: parameters, vertices, adjacency and automorphisms.

Vertices ``u_j`` and ``v_j`` (``0 <= j < n/2``) form the two parts.  ``u_j``
is joined to ``v_{j + 2^k - 1}`` for ``k = 0 .. delta-1``, indices taken
modulo ``n/2``.  Flat ids used for arrays and serialization map ``u_j`` to
``j`` and ``v_j`` to ``n/2 + j``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np


class KnodelError(Exception):
    """Base class for errors raised by this package."""


class InvalidParameters(KnodelError, ValueError):
    """The ``(delta, n)`` pair does not name a Knödel graph."""


class IndexOutOfRange(KnodelError, IndexError):
    pass


class Part(enum.Enum):
    U = "u"
    V = "v"

    @property
    def other(self) -> Part:
        return Part.V if self is Part.U else Part.U


@dataclass(frozen=True, order=True)
class Vertex:
    """A ``(part, index)`` pair.

    Build vertices through :meth:`KnodelGraph.u`, :meth:`KnodelGraph.v` or
    :meth:`KnodelGraph.vertex` so the index is reduced modulo ``n/2``.
    """

    part: Part
    index: int

    def __str__(self) -> str:
        return f"{self.part.value}:{self.index}"


@dataclass(frozen=True)
class KnodelGraph:
    delta: int
    n: int
    half: int = field(init=False)
    s: int = field(init=False)
    m_delta: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        delta, n = self.delta, self.n
        if not isinstance(delta, int) or not isinstance(n, int):
            raise InvalidParameters("delta and n must be integers")
        if n < 2 or n % 2:
            raise InvalidParameters(f"n must be even and >= 2, got {n}")
        if delta < 1:
            raise InvalidParameters(f"delta must be >= 1, got {delta}")
        if 1 << delta > n:
            raise InvalidParameters(f"2^delta = {1 << delta} exceeds n = {n}")
        object.__setattr__(self, "half", n // 2)
        object.__setattr__(self, "s", (1 << (delta - 1)) - 1)
        object.__setattr__(self, "m_delta", tuple((1 << k) - 1 for k in range(delta)))

    def u(self, j: int) -> Vertex:
        return Vertex(Part.U, j % self.half)

    def v(self, j: int) -> Vertex:
        return Vertex(Part.V, j % self.half)

    def vertex(self, part: Part, j: int) -> Vertex:
        return Vertex(part, j % self.half)

    def flat_id(self, x: Vertex) -> int:
        return x.index if x.part is Part.U else self.half + x.index

    def from_flat(self, fid: int) -> Vertex:
        if not 0 <= fid < self.n:
            raise IndexOutOfRange(f"flat id {fid} outside [0, {self.n})")
        return self.u(fid) if fid < self.half else self.v(fid - self.half)

    def vertices(self) -> list[Vertex]:
        return [self.u(j) for j in range(self.half)] + [self.v(j) for j in range(self.half)]

    def offset_of(self, x: Vertex, y: Vertex) -> int | None:
        """Smallest ``a`` in ``m_delta`` realising the edge ``xy``, or None."""
        if x.part is y.part:
            return None
        ui, vj = (x.index, y.index) if x.part is Part.U else (y.index, x.index)
        diff = (vj - ui) % self.half
        for a in self.m_delta:
            if a % self.half == diff:
                return a
        return None

    def offsets_array(self) -> np.ndarray:
        return np.asarray(self.m_delta, dtype=np.int64)

    def neighbor_table(self) -> np.ndarray:
        """``(n/2, delta)`` array whose row ``j`` holds the V-indices of ``N(u_j)``."""
        j = np.arange(self.half, dtype=np.int64)[:, None]
        return (j + self.offsets_array()[None, :]) % self.half

    def edges(self) -> list[tuple[int, int]]:
        """Distinct edges as ``(uid, vid)`` flat-id pairs, sorted."""
        out = set()
        for j in range(self.half):
            for a in self.m_delta:
                out.add((j, self.half + (j + a) % self.half))
        return sorted(out)


def new_graph(delta: int, n: int) -> KnodelGraph:
    return KnodelGraph(delta, n)


def _check(g: KnodelGraph, x: Vertex) -> None:
    if not 0 <= x.index < g.half:
        raise IndexOutOfRange(f"{x} is not a vertex of W({g.delta},{g.n})")


def neighbors(g: KnodelGraph, x: Vertex) -> list[Vertex]:
    """Neighbours of ``x`` in increasing exponent order, duplicates dropped."""
    _check(g, x)
    sign = 1 if x.part is Part.U else -1
    out: list[Vertex] = []
    for a in g.m_delta:
        y = g.vertex(x.part.other, x.index + sign * a)
        if y not in out:
            out.append(y)
    return out


def is_adjacent(g: KnodelGraph, x: Vertex, y: Vertex) -> bool:
    _check(g, x)
    _check(g, y)
    return g.offset_of(x, y) is not None


class AutKind(enum.Enum):
    SHIFT = "shift"
    REFLECT = "reflect"


@dataclass(frozen=True)
class Automorphism:
    """``SHIFT(t)``: ``u_k -> u_{t+k}``, ``v_k -> v_{t+k}``.
    ``REFLECT(t)``: ``u_k -> v_{t-k}``, ``v_k -> u_{t-k}``.
    """

    kind: AutKind
    offset: int

    @classmethod
    def shift(cls, t: int) -> Automorphism:
        return cls(AutKind.SHIFT, t)

    @classmethod
    def reflect(cls, t: int) -> Automorphism:
        return cls(AutKind.REFLECT, t)

    def inverse(self) -> Automorphism:
        if self.kind is AutKind.SHIFT:
            return Automorphism.shift(-self.offset)
        return self


def apply_automorphism(g: KnodelGraph, a: Automorphism, x: Vertex) -> Vertex:
    _check(g, x)
    if a.kind is AutKind.SHIFT:
        return g.vertex(x.part, a.offset + x.index)
    return g.vertex(x.part.other, a.offset - x.index)


def rooting_automorphism(g: KnodelGraph, x: Vertex) -> Automorphism:
    """An automorphism sending ``x`` to ``u_0``."""
    _check(g, x)
    if x.part is Part.U:
        return Automorphism.shift((-x.index) % g.half)
    return Automorphism.reflect(x.index)


def canonical_pair(g: KnodelGraph, x: Vertex, y: Vertex) -> Vertex:
    """Return ``z`` with ``d(x, y) == d(u_0, z)``."""
    _check(g, y)
    return apply_automorphism(g, rooting_automorphism(g, x), y)

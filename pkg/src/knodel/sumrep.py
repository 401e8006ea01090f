"""Signed sums over the offset set and the walks they encode.

A walk ``x_0 x_1 ... x_m`` changes the index by ``+a`` on every U->V step and
by ``-a`` on every V->U step, ``a`` being the offset of the edge used.  The
terms of a :class:`SignedSum` are those offsets; signs alternate and are fixed
by ``leading_sign``.

The fixed-length solver writes ``a`` as a sum of exactly ``delta - 2`` (or
``delta - 1``) numbers of the form ``2^i - 1``.  It is constructive; callers
use it to complete witness walks.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from dataclasses import dataclass

from .core import KnodelError, KnodelGraph, Part, Vertex, _check


class NotAWalk(KnodelError, ValueError):
    pass


class NoSolution(KnodelError):
    """The fixed-length equation has no solution over ``M_{delta-1}``."""


class InvalidTarget(KnodelError, ValueError):
    pass


class Sign(enum.IntEnum):
    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class SignedSum:
    leading_sign: Sign
    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a signed sum needs at least one term")
        object.__setattr__(self, "terms", tuple(int(a) for a in self.terms))

    def value(self, modulus: int | None = None) -> int:
        total = sum(a if k % 2 == 0 else -a for k, a in enumerate(self.terms))
        total *= int(self.leading_sign)
        return total % modulus if modulus else total

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Walk:
    vertices: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a walk has at least one vertex")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.vertices)


def check_walk(g: KnodelGraph, w: Walk) -> None:
    """Raise :class:`NotAWalk` unless consecutive vertices are adjacent in ``g``."""
    for x in w.vertices:
        _check(g, x)
    for k, (x, y) in enumerate(zip(w.vertices, w.vertices[1:])):
        if g.offset_of(x, y) is None:
            raise NotAWalk(f"step {k}: {x} and {y} are not adjacent")


def sum_from_walk(g: KnodelGraph, w: Walk) -> SignedSum:
    if w.length < 1:
        raise NotAWalk("walk has no edges")
    check_walk(g, w)
    terms = [g.offset_of(x, y) for x, y in zip(w.vertices, w.vertices[1:])]
    lead = Sign.PLUS if w.start.part is Part.U else Sign.MINUS
    return SignedSum(lead, tuple(terms))


def walk_from_sum(g: KnodelGraph, start: Vertex, ssum: SignedSum) -> Walk:
    """Walk of ``len(ssum)`` edges from ``start`` taking the given offsets in turn.

    The leading sign must agree with the part of ``start``: a walk leaving U
    moves ``+a`` first, one leaving V moves ``-a`` first.
    """
    _check(g, start)
    expected = Sign.PLUS if start.part is Part.U else Sign.MINUS
    if ssum.leading_sign is not expected:
        raise ValueError(f"a walk starting in {start.part.name} has leading sign {expected.name}")
    bad = [a for a in ssum.terms if a not in g.m_delta]
    if bad:
        raise ValueError(f"terms {bad} are not in M_delta={g.m_delta}")
    out = [start]
    x = start
    for a in ssum.terms:
        step = a if x.part is Part.U else -a
        x = g.vertex(x.part.other, x.index + step)
        out.append(x)
    return Walk(tuple(out))


@dataclass(frozen=True)
class FixedLengthTarget:
    a: int
    parts: int
    delta: int

    def __post_init__(self) -> None:
        if self.parts < 1 or self.a < 0:
            raise InvalidTarget(f"need parts >= 1 and a >= 0, got {self}")


def exceptional_value(delta: int) -> int:
    """The only ``a`` in range not expressible with ``delta - 2`` parts."""
    return (1 << (delta - 1)) - (delta - 1)


def _solve(a: int, level: int) -> list[int]:
    # level - 2 parts from {2^i - 1 : i <= level - 2}; caller guarantees solvability
    if level == 3:
        return [a]
    half_top = (1 << (level - 2)) - 1
    if a <= half_top - 1:
        if a == exceptional_value(level - 1):
            return [(1 << i) - 1 for i in range(1, level - 2)] + [1]
        return _solve(a, level - 1) + [0]
    if a == 2 * half_top:
        return [half_top, half_top] + [0] * (level - 4)
    return _solve(a - half_top, level - 1) + [half_top]


def solve_fixed_length(t: FixedLengthTarget) -> list[int]:
    """Exactly ``delta - 2`` elements of ``{2^i - 1 : 0 <= i <= delta - 2}`` summing to ``t.a``.

    Raises :class:`NoSolution` when ``a`` exceeds ``2^(delta-1) - 2`` or equals
    ``2^(delta-1) - (delta-1)``.  The result is sorted in descending order.
    """
    if t.delta < 3 or t.parts != t.delta - 2:
        raise InvalidTarget(f"need delta >= 3 and parts == delta - 2, got {t}")
    if t.a > (1 << (t.delta - 1)) - 2 or t.a == exceptional_value(t.delta):
        raise NoSolution(f"{t.a} has no {t.parts}-part representation for delta={t.delta}")
    return sorted(_solve(t.a, t.delta), reverse=True)


def solve_fixed_length_relaxed(a: int, delta: int) -> list[int]:
    """Like :func:`solve_fixed_length` with ``delta - 1`` parts; every ``a`` in range works."""
    if delta < 3 or not 0 <= a <= (1 << (delta - 1)) - 2:
        raise InvalidTarget(f"a={a} out of range for delta={delta}")
    if a == exceptional_value(delta):
        ys = [(1 << i) - 1 for i in range(1, delta - 1)] + [1]
    else:
        ys = solve_fixed_length(FixedLengthTarget(a, delta - 2, delta)) + [0]
    return sorted(ys, reverse=True)


def distinct_powers_check(x_exps, a_exps) -> bool:
    """Whether ``sum 2^x_i == sum 2^a_i``; ``a_exps`` strictly increasing, one longer."""
    a_exps = list(a_exps)
    x_exps = list(x_exps)
    if len(a_exps) != len(x_exps) + 1:
        raise ValueError("a_exps must have exactly one more entry than x_exps")
    if any(p >= q for p, q in zip(a_exps, a_exps[1:])) or a_exps[0] < 0:
        raise ValueError("a_exps must be non-negative and strictly increasing")
    # x_i may be negative, so compare exact rationals
    return sum(Fraction(2) ** x for x in x_exps) == sum(1 << a for a in a_exps)

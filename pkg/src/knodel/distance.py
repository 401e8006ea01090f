"""Closed-form distances and diameters, with BFS fallback.

Everything is rooted at ``u_0``; :func:`dist` moves an arbitrary pair there
with an automorphism.  Each formula carries an explicit applicability test.
``method="closed"`` raises :class:`RegimeNotApplicable` outside it,
``method="auto"`` falls back to BFS and says so in the result.

Same-part distances from ``u_0`` to ``u_i`` are ``2 * ceil(t / s)`` with
``t = min(i, n/2 - i)``, once ``t`` clears ``(delta - 3) * s``.  Cross-part
distances follow from the fact that a V vertex is one step further than its
nearest U neighbour.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .core import (
    IndexOutOfRange,
    KnodelError,
    KnodelGraph,
    Part,
    Vertex,
    apply_automorphism,
    rooting_automorphism,
)
from .oracle import DiameterResult, bfs_from, eccentricity_u0
from .sumrep import (
    FixedLengthTarget,
    Sign,
    SignedSum,
    Walk,
    exceptional_value,
    solve_fixed_length,
    solve_fixed_length_relaxed,
    walk_from_sum,
)

__all__ = [
    "DiameterResult",
    "DistanceResult",
    "Regime",
    "RegimeNotApplicable",
    "diameter",
    "diameter_formula",
    "diametral_pair",
    "dist",
    "dist_u0_to_u",
    "dist_u0_to_v",
    "gh_bounds",
    "lower_bound_u",
    "max_u_distance",
    "regime",
]

METHODS = ("auto", "closed", "bfs")


class RegimeNotApplicable(KnodelError):
    """The requested closed form is not proven for these parameters."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class Regime:
    u_closed_ok: bool
    diam_formula_ok: bool


def regime(g: KnodelGraph) -> Regime:
    big = g.delta >= 3
    u_ok = big and g.n >= 4 * (g.delta - 3) * g.s + 4
    diam_ok = big and g.n >= (2 * g.delta - 5) * ((1 << g.delta) - 2) + 4
    assert u_ok or not diam_ok
    return Regime(u_ok, diam_ok)


@dataclass(frozen=True)
class DistanceResult:
    value: int
    method: str  # "closed" or "bfs"
    witness: Walk | None = None
    rule: str = ""


@functools.lru_cache(maxsize=32)
def _u0_table(g: KnodelGraph):
    return bfs_from(g, g.u(0))


def _bfs_result(g: KnodelGraph, target: Vertex, witness: bool) -> DistanceResult:
    table = _u0_table(g)
    walk = Walk(tuple(table.path_to(target))) if witness else None
    return DistanceResult(table[target], "bfs", walk, "bfs")


def _check_index(g: KnodelGraph, i: int) -> None:
    if not 0 <= i < g.half:
        raise IndexOutOfRange(f"index {i} outside [0, {g.half})")


def _check_method(method: str) -> None:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def _u_closed_applies(g: KnodelGraph, i: int) -> bool:
    if g.delta < 3:
        return False
    if i == 0:
        return True
    t = min(i, g.half - i)
    return regime(g).u_closed_ok and t >= (g.delta - 3) * g.s + 1


def _u_value(g: KnodelGraph, i: int) -> int:
    return 2 * ceil_div(min(i, g.half - i), g.s) if i else 0


def _u_witness(g: KnodelGraph, i: int) -> Walk:
    # k pairs (a, b) with sum(a - b) == t: all a = s, the b's absorb k*s - t
    delta, s = g.delta, g.s
    t = min(i, g.half - i)
    k = ceil_div(t, s)
    excess = k * s - t
    a = [s] * k
    if k >= delta - 1:
        b = solve_fixed_length_relaxed(excess, delta) + [0] * (k - delta + 1)
    elif excess != exceptional_value(delta):
        b = solve_fixed_length(FixedLengthTarget(excess, delta - 2, delta))
    else:
        # k == delta - 2 leaves no room for the extra part the exceptional
        # value needs; lower one a to 2^(delta-2) - 1 and re-solve.
        drop = 1 << (delta - 2)
        a[0] = s - drop
        b = solve_fixed_length(FixedLengthTarget(excess - drop, delta - 2, delta))
    first, second = (a, b) if t == i else (b, a)
    terms = [x for pair in zip(first, second) for x in pair]
    walk = walk_from_sum(g, g.u(0), SignedSum(Sign.PLUS, tuple(terms)))
    assert walk.end == g.u(i) and walk.length == 2 * k, (g, i, walk)
    return walk


def dist_u0_to_u(g: KnodelGraph, i: int, *, method: str = "auto", witness: bool = False) -> DistanceResult:
    _check_index(g, i)
    _check_method(method)
    if method != "bfs":
        if _u_closed_applies(g, i):
            if i == 0:
                return DistanceResult(0, "closed", Walk((g.u(0),)) if witness else None, "identity")
            walk = _u_witness(g, i) if witness else None
            return DistanceResult(_u_value(g, i), "closed", walk, "u-ceiling")
        if method == "closed":
            raise RegimeNotApplicable(f"no closed form for d(u_0, u_{i}) in W({g.delta},{g.n})")
    return _bfs_result(g, g.u(i), witness)


def dist_u0_to_v(g: KnodelGraph, j: int, *, method: str = "auto", witness: bool = False) -> DistanceResult:
    _check_index(g, j)
    _check_method(method)
    if method != "bfs":
        nbr_idx = [(j - a) % g.half for a in g.m_delta]
        if g.delta >= 3 and 0 in nbr_idx:
            walk = Walk((g.u(0), g.v(j))) if witness else None
            return DistanceResult(1, "closed", walk, "adjacent")
        if all(_u_closed_applies(g, i) for i in nbr_idx):
            best = min(nbr_idx, key=lambda i: _u_value(g, i))
            walk = None
            if witness:
                walk = Walk(_u_witness(g, best).vertices + (g.v(j),))
            return DistanceResult(1 + _u_value(g, best), "closed", walk, "v-neighbor-min")
        if method == "closed":
            raise RegimeNotApplicable(f"no closed form for d(u_0, v_{j}) in W({g.delta},{g.n})")
    return _bfs_result(g, g.v(j), witness)


def dist(g: KnodelGraph, x: Vertex, y: Vertex, *, method: str = "auto", witness: bool = False) -> DistanceResult:
    root = rooting_automorphism(g, x)
    z = apply_automorphism(g, root, y)
    query = dist_u0_to_u if z.part is Part.U else dist_u0_to_v
    res = query(g, z.index, method=method, witness=witness)
    if res.witness is None:
        return res
    back = root.inverse()
    walk = Walk(tuple(apply_automorphism(g, back, w) for w in res.witness.vertices))
    return DistanceResult(res.value, res.method, walk, res.rule)


def max_u_distance(g: KnodelGraph) -> DistanceResult:
    """Largest ``d(u_0, u_i)``, attained at ``i = floor(n/4)``."""
    if not regime(g).u_closed_ok:
        raise RegimeNotApplicable(f"W({g.delta},{g.n}) is below the U-distance threshold")
    return DistanceResult(2 * ceil_div(g.n // 4, g.s), "closed", None, "u-max")


def diameter_formula(g: KnodelGraph) -> DiameterResult:
    if not regime(g).diam_formula_ok:
        raise RegimeNotApplicable(f"W({g.delta},{g.n}) is below the diameter-formula threshold")
    return DiameterResult(1 + ceil_div(g.n - 2, (1 << g.delta) - 2), "formula")


def diametral_pair(g: KnodelGraph) -> DiameterResult:
    if not regime(g).diam_formula_ok:
        raise RegimeNotApplicable(f"W({g.delta},{g.n}) is below the diameter-formula threshold")
    iu = g.n // 4
    jv = ((g.n + 2 * g.s) // 4) % g.half
    du = dist_u0_to_u(g, iu, method="closed").value
    dv = dist_u0_to_v(g, jv, method="closed").value
    far = g.u(iu) if du >= dv else g.v(jv)
    return DiameterResult(max(du, dv), "diametral-pair", (g.u(0), far))


def diameter(g: KnodelGraph, method: str = "auto") -> DiameterResult:
    """``auto`` uses the formula when it applies and BFS otherwise."""
    if method == "formula" or (method == "auto" and regime(g).diam_formula_ok):
        return diameter_formula(g)
    if method not in ("auto", "bfs"):
        raise ValueError(f"unknown diameter method {method!r}")
    return DiameterResult(eccentricity_u0(g), "bfs")


def gh_bounds(g: KnodelGraph) -> tuple[int, int]:
    if g.delta < 2:
        raise RegimeNotApplicable("bounds need delta >= 2")
    base = 2 * ((g.n // 4) // g.s)
    return base + 1, base + 3


def lower_bound_u(g: KnodelGraph, i: int) -> int:
    if g.delta < 2:
        raise RegimeNotApplicable("bound needs delta >= 2")
    if not 1 <= i <= g.n // 4:
        raise IndexOutOfRange(f"index {i} outside [1, {g.n // 4}]")
    return 2 * ceil_div(i, g.s)

"""Knödel graphs: construction, exact distances and diameters, BFS oracle."""
from ._kernel import BACKEND
from .core import (
    Automorphism,
    IndexOutOfRange,
    InvalidParameters,
    KnodelError,
    KnodelGraph,
    Part,
    Vertex,
    apply_automorphism,
    canonical_pair,
    is_adjacent,
    neighbors,
    new_graph,
)
from .distance import (
    DiameterResult,
    DistanceResult,
    RegimeNotApplicable,
    diameter,
    diameter_formula,
    diametral_pair,
    dist,
    dist_u0_to_u,
    dist_u0_to_v,
    gh_bounds,
    lower_bound_u,
    max_u_distance,
    regime,
)
from .oracle import DiameterMode, Disconnected, bfs_from, diameter_exact, eccentricity_u0
from .sumrep import (
    FixedLengthTarget,
    NoSolution,
    SignedSum,
    Walk,
    distinct_powers_check,
    solve_fixed_length,
    solve_fixed_length_relaxed,
    sum_from_walk,
    walk_from_sum,
)

__version__ = "0.1.0"

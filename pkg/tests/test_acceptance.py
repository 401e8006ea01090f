"""Exit criteria.  Every check is exact (tolerance 0).

Each test records a one-line verdict shown in the "acceptance criteria"
section of the pytest summary.
"""
import random
import time
from itertools import combinations, combinations_with_replacement

import pytest

from conftest import ACCEPTANCE
from knodel.core import new_graph
from knodel.distance import (
    ceil_div,
    diameter_formula,
    diametral_pair,
    dist,
    dist_u0_to_u,
    dist_u0_to_v,
    gh_bounds,
    lower_bound_u,
    regime,
)
from knodel.oracle import DiameterMode, bfs_from, diameter_exact, eccentricity_u0
from knodel.sumrep import (
    FixedLengthTarget,
    NoSolution,
    check_walk,
    distinct_powers_check,
    exceptional_value,
    solve_fixed_length,
    solve_fixed_length_relaxed,
)
from knodel.sweep import FERTIN, TABLE1_FAMILIES

import bruteforce

FORMULA_SWEEP = {3: (10, 600), 4: (46, 600), 5: (154, 900), 6: (438, 1200)}
TABLE1_MAX_DELTA = 12


def formula_graphs(deltas=FORMULA_SWEEP):
    for delta in deltas:
        lo, hi = FORMULA_SWEEP[delta]
        for n in range(lo, hi + 1, 2):
            yield new_graph(delta, n)


def table1_graphs():
    for fam in TABLE1_FAMILIES + (FERTIN,):
        for d in range(fam.min_delta, TABLE1_MAX_DELTA + 1):
            yield fam, d, new_graph(fam.graph_delta(d), fam.order(d))


def record(key, ok, detail):
    ACCEPTANCE[key] = (ok, detail)
    assert ok, detail


def test_01_diameter_formula():
    t0 = time.perf_counter()
    bad, count = [], 0
    for g in formula_graphs():
        count += 1
        assert regime(g).diam_formula_ok
        want = 1 + ceil_div(g.n - 2, 2**g.delta - 2)
        got = eccentricity_u0(g)
        if got != want or diameter_formula(g).value != want:
            bad.append((g.delta, g.n, got, want))
    elapsed = time.perf_counter() - t0
    record("1 diameter formula", not bad and elapsed < 60,
           f"{count} graphs, {len(bad)} mismatches, {elapsed:.2f}s")


def test_02_exceptional_small_case():
    g = new_graph(3, 8)
    got = eccentricity_u0(g)
    all_pairs = diameter_exact(g, DiameterMode.ALL_PAIRS).value
    ok = got == 3 == all_pairs and not regime(g).diam_formula_ok and regime(new_graph(3, 10)).diam_formula_ok
    record("2 W(3,8)", ok, f"bfs diam {got}, all-pairs {all_pairs}, formula regime excludes n=8: {not regime(g).diam_formula_ok}")


def test_03_diametral_pair():
    bad, count = [], 0
    for g in formula_graphs():
        count += 1
        table = bfs_from(g, g.u(0))
        pair = max(table[g.u(g.n // 4)], table[g.v((g.n + 2 * g.s) // 4)])
        diam = int(table.dist.max())
        if not pair == diam == diametral_pair(g).value:
            bad.append((g.delta, g.n))
    record("3 diametral pair", not bad, f"{count} graphs, {len(bad)} disagreements")


def test_04_distance_closed_forms():
    bad, closed, total = [], 0, 0
    for g in formula_graphs(deltas=(3, 4, 5)):
        table = bfs_from(g, g.u(0))
        for i in range(g.half):
            for r, x in ((dist_u0_to_u(g, i), g.u(i)), (dist_u0_to_v(g, i), g.v(i))):
                total += 1
                closed += r.method == "closed"
                if r.value != table[x]:
                    bad.append((g.delta, g.n, str(x)))
    record("4 distance closed forms", not bad,
           f"{total} vertices ({closed} via closed form), {len(bad)} mismatches")


def test_05_solver():
    problems = []
    for delta in range(3, 9):
        feasible = bruteforce.solvable_values(delta - 2, delta)
        top = 2 ** (delta - 1) - 2
        expected = set(range(top + 1)) - {exceptional_value(delta)}
        solved = set()
        for a in range(top + 1):
            try:
                ys = solve_fixed_length(FixedLengthTarget(a, delta - 2, delta))
            except NoSolution:
                continue
            solved.add(a)
        if not solved == expected == (feasible & set(range(top + 1))):
            problems.append(f"completeness delta={delta}")
    for delta in range(3, 17):
        alphabet = {2**i - 1 for i in range(delta - 1)}
        for a in range(2 ** (delta - 1) - 1):
            ys = solve_fixed_length_relaxed(a, delta)
            if len(ys) != delta - 1 or sum(ys) != a or not set(ys) <= alphabet:
                problems.append(f"relaxed delta={delta} a={a}")
            if a != exceptional_value(delta):
                ys = solve_fixed_length(FixedLengthTarget(a, delta - 2, delta))
                if len(ys) != delta - 2 or sum(ys) != a or not set(ys) <= alphabet:
                    problems.append(f"strict delta={delta} a={a}")
    record("5 solver", not problems, f"complete for delta 3..8, sound for 3..16; {len(problems)} problems")


def test_06_walk_witnesses():
    rng = random.Random(2024)
    bad = 0
    for _ in range(10_000):
        delta = rng.randint(3, 6)
        lo, hi = FORMULA_SWEEP[delta]
        g = new_graph(delta, rng.randrange(lo, hi + 1, 2))
        x, y = g.from_flat(rng.randrange(g.n)), g.from_flat(rng.randrange(g.n))
        r = dist(g, x, y, witness=True)
        try:
            check_walk(g, r.witness)
        except ValueError:
            bad += 1
            continue
        if r.witness.length != r.value or (r.witness.start, r.witness.end) != (x, y):
            bad += 1
    record("6 witness walks", bad == 0, f"10000 random queries, {bad} invalid witnesses")


def test_07_table1():
    bad, count = [], 0
    for fam, d, g in table1_graphs():
        count += 1
        got = eccentricity_u0(g)
        if got != fam.expected(d):
            bad.append(f"{fam.name} D={d}: {got} != {fam.expected(d)}")
    record("7 table 1 + W(D,2^D)", not bad, f"{count} graphs up to D={TABLE1_MAX_DELTA}, {len(bad)} mismatches")


def test_08_bound_sandwich():
    groups = {"formula sweep + W(3,8)": list(formula_graphs()) + [new_graph(3, 8)],
              "table 1": [g for _, _, g in table1_graphs()]}
    parts, ok = [], True
    for name, graphs in groups.items():
        outside = []
        for g in graphs:
            lo, hi = gh_bounds(g)
            diam = eccentricity_u0(g)
            if not lo <= diam <= hi:
                outside.append(f"W({g.delta},{g.n})={diam} not in [{lo},{hi}]")
        ok &= not outside
        parts.append(f"{name}: {len(outside)}/{len(graphs)} outside" + (f" (e.g. {outside[0]})" if outside else ""))
    record("8 bound sandwich", ok, "; ".join(parts))


def test_09_property_suites():
    problems = []
    for delta, hi in ((3, 400), (4, 400), (5, 500)):
        for n in range(2**delta, hi + 1, 2):
            g = new_graph(delta, n)
            d = bfs_from(g, g.u(0)).dist
            h = g.half
            if (d[:h] % 2).any() or not (d[h:] % 2).all():
                problems.append(f"parity W({delta},{n})")
            if any(d[i] != d[h - i] for i in range(1, h)):
                problems.append(f"symmetry W({delta},{n})")
            if any(d[i] < lower_bound_u(g, i) for i in range(1, n // 4 + 1)):
                problems.append(f"lower bound W({delta},{n})")
            if any(abs(int(d[a]) - int(d[b])) != 1 for a, b in g.edges()):
                problems.append(f"unit step W({delta},{n})")
    # the check is symmetric in x, so multisets cover every ordered tuple
    for k in range(1, 5):
        for x in combinations_with_replacement(range(11), k):
            for a in combinations(range(11), k + 1):
                if distinct_powers_check(x, a):
                    problems.append(f"powers {x} {a}")
    for delta in range(2, 6):
        for n in range(2**delta, 257, 2):
            g = new_graph(delta, n)
            if diameter_exact(g).value != diameter_exact(g, DiameterMode.ALL_PAIRS).value:
                problems.append(f"all-pairs W({delta},{n})")
    record("9 property suites", not problems, f"{len(problems)} violations")

"""Acceptance criteria, one test per criterion. Values are exact integers.

Each test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them in the terminal summary. Running this file directly prints them too.
"""

import math
import random
import time

import networkx as nx

from centraltdc.census import graphs, trees
from centraltdc.central import central
from centraltdc.coloring import chromatic_number, is_tdc
from centraltdc.constructions import (
    complement_central_graph,
    construct_tdc_central,
    construct_tdc_central_join_empty,
    construct_tdc_central_union,
    construct_tdc_complement_central,
)
from centraltdc.errors import BudgetExceeded
from centraltdc.formulas import formula_value
from centraltdc.graph import (
    FamilySpec,
    Graph,
    build_family,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    join,
    path_graph,
)
from centraltdc.io import read_graph6_stream, to_graph6
from centraltdc.report import ValueCache, theorem_report
from centraltdc.solvers import (
    gamma_t_bruteforce,
    tdc_lower_bound_certified,
    tdc_number,
    tdc_number_bruteforce,
    total_domination_number,
)

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str, started: float) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} | {detail} | {time.perf_counter() - started:.1f}s"
    RESULTS.append(line)
    print(line)
    assert ok, line


def chi_dt_central(text: str, budget=None) -> int:
    return tdc_number(central(build_family(FamilySpec.parse(text))).result, budget=budget).value


def compare(specs, budget=None):
    got = {s: chi_dt_central(s, budget) for s in specs}
    want = {s: formula_value(FamilySpec.parse(s)) for s in specs}
    bad = {s: (got[s], want[s]) for s in specs if got[s] != want[s]}
    return got, bad


def test_criterion_01_paths():
    t = time.perf_counter()
    got, bad = compare([f"path:{n}" for n in range(2, 10)])
    ok = not bad and got["path:3"] == 4 and got["path:5"] == 5
    record(1, "paths n=2..9 solver == formula", ok, f"values {list(got.values())} mismatches {bad}", t)


def test_criterion_02_cycles():
    t = time.perf_counter()
    got, bad = compare([f"cycle:{n}" for n in range(3, 10)])
    ok = not bad and got["cycle:3"] == 4 and got["cycle:4"] == 4
    record(2, "cycles n=3..9 solver == formula", ok, f"values {list(got.values())} mismatches {bad}", t)


def test_criterion_03_complete():
    t = time.perf_counter()
    details, ok = [], True
    for n in range(2, 7):
        g = central(complete_graph(n)).result
        want = formula_value(FamilySpec("complete", (n,)))
        try:
            value = tdc_number(g, budget=600).value
            ok &= value == want
            details.append(f"K{n}:{value}")
        except BudgetExceeded:
            # fallback: construction from above, certified infeasibility from below
            _, col = construct_tdc_central(FamilySpec("complete", (n,)))
            upper_ok = is_tdc(g, col) and col.num_classes <= want
            lower_ok = tdc_lower_bound_certified(g, want - 1, budget=600)
            ok &= upper_ok and lower_ok
            details.append(f"K{n}: construction<={want} {upper_ok}, no {want - 1}-TDC {lower_ok}")
    gammas = [total_domination_number(central(complete_graph(n)).result).value for n in range(2, 8)]
    gamma_ok = gammas == [n + math.ceil(n / 2) - 1 for n in range(2, 8)]
    record(3, "complete n=2..6 and gamma_t(C(K_n)) n=2..7", ok and gamma_ok, f"{' '.join(details)} gamma_t {gammas}", t)


def test_criterion_04_bipartite():
    t = time.perf_counter()
    pairs = [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    got, bad = compare([f"bipartite:{m},{n}" for m, n in pairs])
    cg, col = construct_tdc_central(FamilySpec.parse("bipartite:3,5"))
    construction_ok = col.num_classes == 8 and bool(is_tdc(cg.result, col))
    try:
        exact = tdc_number(cg.result, budget=600).value
        detail35 = f"(3,5) construction 8 certified={construction_ok}, solver {exact}"
    except BudgetExceeded as exc:
        exact = None
        detail35 = f"(3,5) construction only, solver interval [{exc.lower}, {exc.upper}]"
    ok = not bad and construction_ok and exact in (8, None)
    record(4, "complete bipartite", ok, f"values {list(got.values())} {detail35}", t)


def test_criterion_05_wheels():
    t = time.perf_counter()
    got, bad = compare([f"wheel:{n}" for n in range(3, 7)], budget=600)
    ok = not bad and got["wheel:5"] == 7
    record(5, "wheels n=3..6 solver == formula", ok, f"values {list(got.values())}; C(W5) resolved to {got['wheel:5']}", t)


def test_criterion_06_double_stars():
    t = time.perf_counter()
    got, bad = compare([f"double_star:{n}" for n in (1, 2, 3)])
    ok = not bad and list(got.values()) == [4, 5, 6]
    record(6, "double stars n=1..3 == n+3", ok, f"values {list(got.values())}", t)


def test_criterion_07_multipartite():
    t = time.perf_counter()
    got, bad = compare(["multipartite:1,1,2", "multipartite:1,2,2", "multipartite:2,2,2"])
    cg, col = construct_tdc_central(FamilySpec.parse("multipartite:3,3,3"))
    construction_ok = col.num_classes == 9 and bool(is_tdc(cg.result, col))
    ok = not bad and list(got.values()) == [5, 6, 7] and construction_ok
    record(7, "multipartite", ok, f"values {list(got.values())}, (3,3,3) construction 9 certified={construction_ok}", t)


def test_criterion_08_oracle_equivalence():
    t = time.perf_counter()
    checked, mismatches = 0, []
    for n in range(2, 8):
        for g in graphs(n, connected=True):
            checked += 1
            if tdc_number(g).value != tdc_number_bruteforce(g):
                mismatches.append(("tdc", to_graph6(g)))
            if total_domination_number(g).value != gamma_t_bruteforce(g):
                mismatches.append(("gamma_t", to_graph6(g)))
    n7 = len(graphs(7, connected=True))
    central_checked = 0
    for n in range(2, 5):
        for g in graphs(n, connected=True):
            h = central(g).result
            central_checked += 1
            if tdc_number(h).value != tdc_number_bruteforce(h):
                mismatches.append(("tdc central", to_graph6(g)))
            if total_domination_number(h).value != gamma_t_bruteforce(h):
                mismatches.append(("gamma_t central", to_graph6(g)))
    ok = not mismatches and n7 == 853
    record(8, "solver == brute-force oracles", ok,
           f"{checked} graphs ({n7} at n=7), {central_checked} central graphs, mismatches {mismatches}", t)


def test_criterion_09_property_suite():
    t = time.perf_counter()
    cache = ValueCache()
    wanted = [
        "tdc_sandwich",
        "tdc_two_iff_complete_bipartite",
        "tdc_n_iff_complete",
        "central_longest_path_bounds",
        "central_max_degree_bounds",
        "central_gamma_t_bounds",
        "no_central_value_three",
        "central_complete_characterization",
    ]
    count, failures, evaluated = 0, [], dict.fromkeys(wanted, 0)
    for n in range(2, 6):
        for g in graphs(n, connected=True):
            count += 1
            r = theorem_report(g, budget=None, cache=cache, joins=())
            for name in wanted:
                e = r.entry(name)
                if e.applicable:
                    evaluated[name] += 1
                    if e.skipped or not e.holds:
                        failures.append((to_graph6(g), name))
    # graph count cross-checked against the networkx atlas
    atlas = sum(1 for h in nx.graph_atlas_g() if 2 <= h.number_of_nodes() <= 5 and nx.is_connected(h))
    witnesses = {n: chi_dt_central(f"kn_minus_matching:{n}") for n in range(4, 9)}
    ok = not failures and count == atlas == 30 and all(v == n for n, v in witnesses.items())
    ok &= evaluated["central_complete_characterization"] == 6 + 21 and evaluated["central_gamma_t_bounds"] == 27
    record(9, "property suite on connected graphs n=2..5", ok,
           f"{count} graphs, entries evaluated {evaluated}, failures {failures}, K_n minus matching {witnesses}", t)


def test_criterion_10_join_sandwich():
    t = time.perf_counter()
    rows, failures = 0, []
    for n in range(2, 5):
        for g in graphs(n, connected=True):
            base = tdc_number(central(g).result)
            x = base.value
            for k in (1, 2):
                big = central(join(g, Graph.empty(k))).result
                y = tdc_number(big).value
                col = construct_tdc_central_join_empty(g, k, base.witness)
                rows += 1
                if not (x + k <= y <= x + k + 1 and is_tdc(big, col) and col.num_classes == x + k + 1):
                    failures.append((to_graph6(g), k, x, y, col.num_classes))
    record(10, "join sandwich t=1,2 and construction at upper bound", not failures,
           f"{rows} (graph, t) pairs, failures {failures}", t)


def test_criterion_11_complement_central():
    t = time.perf_counter()
    failures, tree_count = [], 0
    for n in range(4, 8):
        for g in trees(n):
            tree_count += 1
            h = complement_central_graph(g)
            col = construct_tdc_complement_central(g)
            if tdc_number(h).value != n or not is_tdc(h, col) or col.num_classes != n:
                failures.append(("tree", to_graph6(g)))
    rng = random.Random(20240607)
    pool = [g for n in (4, 5, 6, 7) for g in graphs(n, connected=True) if g.m >= n]
    sample = rng.sample(pool, 10)
    values = []
    for g in sample:
        h = complement_central_graph(g)
        col = construct_tdc_complement_central(g)
        v = tdc_number(h).value
        values.append((g.n, g.m, v))
        if v != g.m or not is_tdc(h, col) or col.num_classes != g.m:
            failures.append(("dense", to_graph6(g)))
    record(11, "complement of central: trees give n, m>=n gives m", not failures,
           f"{tree_count} trees, sampled (n, m, value) {values}, failures {failures}", t)


def test_criterion_12_unions():
    t = time.perf_counter()
    cases = {
        "K2+K2": [complete_graph(2)] * 2,
        "K3+K3": [complete_graph(3)] * 2,
        "P6+P6": [path_graph(6)] * 2,
        "C6+C6": [cycle_graph(6)] * 2,
    }
    details, ok = [], True
    for name, parts in cases.items():
        g = disjoint_union(parts)
        n, w = g.n, len(parts)
        lower = sum(2 * p.n // 3 for p in parts) + 1
        value = tdc_number(central(g).result).value
        col = construct_tdc_central_union(parts)
        ok &= lower <= value <= n + w - 1
        ok &= bool(is_tdc(central(g).result, col)) and col.num_classes == n - w + 1
        if name in ("K2+K2", "K3+K3"):
            ok &= value == n - w + 1
        if name == "P6+P6":
            ok &= value == lower
        details.append(f"{name}: {lower}<={value}<={n + w - 1}")
    record(12, "union bounds and sharpness", ok, "; ".join(details), t)


def test_criterion_13_nordhaus_gaddum():
    t = time.perf_counter()
    stream = "".join(to_graph6(g) + "\n" for n in range(1, 7) for g in graphs(n))
    count, failures = 0, []
    for g in read_graph6_stream(stream):
        count += 1
        s = chromatic_number(g).value + chromatic_number(complement(g)).value
        if not (4 * g.n <= s * s and s <= g.n + 1):
            failures.append(to_graph6(g))
    ok = not failures and count == 1 + 2 + 4 + 11 + 34 + 156
    record(13, "ceil(2 sqrt n) <= chi + chi(complement) <= n+1, all graphs n<=6", ok,
           f"{count} graphs from a graph6 stream, failures {failures}", t)


def test_criterion_14_total_domination():
    t = time.perf_counter()
    counts, failures = {}, []
    for n in (4, 7, 8, 9):
        gs = graphs(n, connected=True, min_degree=2)
        counts[n] = len(gs)
        bound = 4 * n // 7
        for g in gs:
            if total_domination_number(g).value > bound:
                failures.append(to_graph6(g))
    ok = not failures and counts[4] == 3 and counts[7] == 507
    record(14, "gamma_t <= floor(4n/7), connected min degree >= 2, n in {4,7,8,9}", ok,
           f"graphs per order {counts}, failures {failures}", t)


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)

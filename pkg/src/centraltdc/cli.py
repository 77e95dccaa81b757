"""Command-line interface.

Exit status: 0 when every check passed, 1 when a violation was found,
2 on usage or input errors, 3 when an exact solve ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import census, io
from .central import central
from .coloring import Coloring, chromatic_number, is_proper, is_tdc, is_tds
from .constructions import construct_tdc_central
from .errors import BudgetExceeded, TDCError
from .formulas import formula_complement_central, formula_value
from .graph import FamilySpec, Graph, build_family, complement
from .report import report_to_dict, serialize_report, theorem_report
from .solvers import (
    GAMMA_T_CAP,
    TDC_CAP,
    gamma_t_bruteforce,
    tdc_number,
    tdc_number_bruteforce,
    total_domination_number,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> tuple[Graph, FamilySpec | None]:
    if bool(args.family) == bool(args.graph):
        raise UsageError("give exactly one of --family or --graph")
    if args.family:
        spec = FamilySpec.parse(args.family)
        return build_family(spec), spec
    fmt = args.format or io.guess_format(args.graph)
    return io.parse_graph(_read(args.graph), fmt), None


def _target(args, g: Graph) -> Graph:
    """Apply --central / --complement (central first)."""
    if getattr(args, "central", False):
        g = central(g).result
    if getattr(args, "complement", False):
        g = complement(g)
    return g


def _emit(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_text(g: Graph, fmt: str, comments=()) -> str:
    if fmt == "graph6":
        return io.to_graph6(g) + "\n"
    return io.to_edge_list(g, comments)


# --------------------------------------------------------------- commands


def cmd_construct(args) -> int:
    spec = FamilySpec.parse(args.family)
    g = build_family(spec)
    if not args.central:
        _emit(args, _graph_text(g, args.format or "edge-list", [f"family {spec}"]))
        return EXIT_OK
    cg, coloring = construct_tdc_central(spec)
    verdict = is_tdc(cg.result, coloring)
    if args.witness_out:
        with open(args.witness_out, "w") as fh:
            fh.write(io.dump_witness("tdc", coloring, cg.result.n))
    if args.json:
        body = {
            "family": str(spec),
            "graph6": io.to_graph6(cg.result),
            "classes": [[cg.role(v) for v in c] for c in coloring.classes],
            "num_classes": coloring.num_classes,
            "certified": bool(verdict),
        }
        _emit(args, json.dumps(body) + "\n")
    else:
        lines = [f"C({spec}): {cg.result.n} vertices, {coloring.num_classes} classes"]
        lines += [f"  V{k + 1} = {{{', '.join(cg.role(v) for v in c)}}}" for k, c in enumerate(coloring.classes)]
        lines.append(f"certified: {verdict.describe()}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if verdict else EXIT_VIOLATION


def cmd_central(args) -> int:
    g, spec = _load_graph(args)
    cg = central(g)
    fmt = args.format_out or "edge-list"
    if fmt == "graph6":
        _emit(args, io.to_graph6(cg.result) + "\n")
        return EXIT_OK
    comments = [f"central graph of a graph with n={g.n} m={g.m}"]
    comments += [f"vertex {v} {cg.role(v)}" for v in range(cg.result.n)]
    _emit(args, io.to_edge_list(cg.result, comments))
    return EXIT_OK


def _solve(g: Graph, invariant: str, cap: int | None, budget: float | None):
    if invariant == "tdc":
        return tdc_number(g, cap=cap or TDC_CAP, budget=budget)
    if invariant == "gammat":
        return total_domination_number(g, cap=cap or GAMMA_T_CAP, budget=budget)
    deadline = None if budget is None else time.perf_counter() + budget
    return chromatic_number(g, cap=cap or 64, deadline=deadline)


def cmd_solve(args) -> int:
    g, _ = _load_graph(args)
    g = _target(args, g)
    try:
        res = _solve(g, args.invariant, args.cap, args.budget_secs)
    except BudgetExceeded as exc:
        print(f"{args.invariant}: over budget, value in [{exc.lower}, {exc.upper}]")
        return EXIT_BUDGET
    witness = res.witness if args.invariant == "gammat" else list(res.witness.assignment)
    if args.witness_out:
        with open(args.witness_out, "w") as fh:
            fh.write(io.dump_witness(args.invariant, res.witness, g.n))
    if args.json:
        body = {
            "invariant": res.invariant,
            "value": res.value,
            "n": g.n,
            "witness": witness,
            "nodes": res.nodes,
            "elapsed": round(res.elapsed, 6),
        }
        print(json.dumps(body))
    else:
        print(f"{res.invariant} = {res.value}")
        print(f"witness: {witness}")
        print(f"nodes: {res.nodes}  elapsed: {res.elapsed:.3f}s")
    return EXIT_OK


def cmd_verify(args) -> int:
    g, _ = _load_graph(args)
    g = _target(args, g)
    invariant, witness = io.load_witness(_read(args.coloring))
    if args.invariant:
        invariant = args.invariant
    if invariant == "gammat":
        if any(not 0 <= v < g.n for v in witness):
            raise UsageError(f"witness vertex out of range 0..{g.n - 1}")
        verdict = is_tds(g, witness)
        size = len(set(witness))
    else:
        if not isinstance(witness, Coloring):
            raise UsageError("coloring witness expected")
        verdict = is_tdc(g, witness) if invariant == "tdc" else is_proper(g, witness)
        size = witness.num_classes
    if args.json:
        print(json.dumps({"invariant": invariant, "ok": bool(verdict), "size": size, "detail": verdict.describe()}))
    else:
        print(f"{invariant}: {verdict.describe()} ({size})")
    return EXIT_OK if verdict else EXIT_VIOLATION


def cmd_formula(args) -> int:
    if args.complement:
        g, _ = _load_graph(args)
        value = formula_complement_central(g)
    else:
        if not args.family:
            raise UsageError("formula needs --family (or --graph with --complement)")
        value = formula_value(FamilySpec.parse(args.family), gamma=args.invariant == "gammat")
    print(json.dumps({"value": value}) if args.json else value)
    return EXIT_OK


def cmd_report(args) -> int:
    g, spec = _load_graph(args)
    r = theorem_report(g, budget=args.budget_secs, family=spec)
    if args.json:
        _emit(args, serialize_report(r, indent=2).decode() + "\n")
    else:
        lines = [f"graph n={r.graph['n']} m={r.graph['m']} graph6={r.graph['graph6']}"]
        for e in r.entries:
            if not e.applicable:
                status, detail = "n/a ", e.note
            elif e.skipped:
                status, detail = "skip", e.note
            else:
                status = "ok  " if e.holds else "FAIL"
                ops = {"between": f"{e.lhs} <= {e.value} <= {e.rhs}", "le": f"{e.lhs} <= {e.rhs}",
                       "eq": f"{e.lhs} == {e.rhs}", "ne": f"{e.lhs} != {e.rhs}",
                       "iff": f"({e.lhs} == {e.rhs}) iff {e.condition}"}[e.relation]
                detail = ops + (f"  [{e.note}]" if e.note else "")
            lines.append(f"{status} {e.theorem}: {detail}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if r.ok else EXIT_VIOLATION


def _report_line(text: str, budget: float | None) -> str:
    r = theorem_report(io.from_graph6(text), budget=budget)
    return json.dumps(report_to_dict(r))


def cmd_sweep(args) -> int:
    data = _read(args.graph or "-").decode("ascii")
    lines = [ln.strip() for ln in data.splitlines() if ln.strip()]
    for _ in io.read_graph6_stream(data):
        pass  # fail fast, with byte offsets, on malformed input
    work = partial(_report_line, budget=args.budget_secs)
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            records = list(pool.map(work, lines, chunksize=8))
    else:
        records = [work(ln) for ln in lines]
    bad = 0
    out = []
    for rec in records:
        body = json.loads(rec)
        failed = [e["theorem"] for e in body["entries"] if e["applicable"] and not e["skipped"] and not e["holds"]]
        bad += bool(failed)
        out.append(rec if args.json else f"{body['graph']['graph6']}: {'FAIL ' + ','.join(failed) if failed else 'ok'}")
    _emit(args, "".join(line + "\n" for line in out))
    if not args.json:
        print(f"{len(records)} graphs, {bad} with violations", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def oracle_check(min_n: int, max_n: int, on_central: bool = False) -> list[str]:
    """Compare the exact solvers with the brute-force oracles on every
    connected graph in the range. Returns mismatch descriptions."""
    problems = []
    for n in range(min_n, max_n + 1):
        for g in census.graphs(n, connected=True):
            h = central(g).result if on_central else g
            if h.min_degree == 0:
                continue
            got, want = tdc_number(h).value, tdc_number_bruteforce(h)
            if got != want:
                problems.append(f"{io.to_graph6(g)}: tdc {got} != oracle {want}")
            got, want = total_domination_number(h).value, gamma_t_bruteforce(h)
            if got != want:
                problems.append(f"{io.to_graph6(g)}: gamma_t {got} != oracle {want}")
    return problems


def cmd_oracle_check(args) -> int:
    problems = oracle_check(args.min_n, args.max_n, args.central)
    for p in problems:
        print(p)
    print(f"{len(problems)} mismatches", file=sys.stderr)
    return EXIT_VIOLATION if problems else EXIT_OK


def cmd_enumerate(args) -> int:
    gs = census.graphs(args.n, connected=args.connected, min_degree=args.min_degree)
    _emit(args, "".join(io.to_graph6(g) + "\n" for g in gs))
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="centraltdc", description="Total dominator colorings of central graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp, required=True):
        sp.add_argument("--family", help="family spec such as path:8, bipartite:3,5, wheel:5")
        sp.add_argument("--graph", help="graph file, '-' for stdin")
        sp.add_argument("--format", choices=["graph6", "edge-list"], help="input format (default: from extension)")

    def common(sp):
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument("--budget-secs", type=float, default=60.0, help="time limit per exact solve")
        sp.add_argument("--cap", type=int, help="order cap for the exact solver")
        sp.add_argument("-o", "--output", help="write output to this file")

    sp = sub.add_parser("construct", help="build a family graph, or with --central its explicit TDC")
    sp.add_argument("--family", required=True)
    sp.add_argument("--central", action="store_true")
    sp.add_argument("--format", choices=["graph6", "edge-list"])
    sp.add_argument("--witness-out")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("central", help="emit C(G) with vertex roles")
    graph_input(sp)
    sp.add_argument("--format-out", choices=["graph6", "edge-list"])
    common(sp)
    sp.set_defaults(func=cmd_central)

    sp = sub.add_parser("solve", help="exact chi, gamma_t or chi_d^t")
    graph_input(sp)
    sp.add_argument("--central", action="store_true", help="solve on C(G)")
    sp.add_argument("--complement", action="store_true", help="solve on the complement (after --central)")
    sp.add_argument("--invariant", choices=["chi", "gammat", "tdc"], default="tdc")
    sp.add_argument("--witness-out")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a witness file against a graph")
    graph_input(sp)
    sp.add_argument("--central", action="store_true")
    sp.add_argument("--complement", action="store_true")
    sp.add_argument("--coloring", required=True, help="witness JSON")
    sp.add_argument("--invariant", choices=["chi", "gammat", "tdc"])
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("formula", help="closed-form value")
    graph_input(sp)
    sp.add_argument("--complement", action="store_true", help="value for the complement of C(G), from --graph")
    sp.add_argument("--invariant", choices=["gammat", "tdc"], default="tdc")
    common(sp)
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("report", help="theorem-conformance report")
    graph_input(sp)
    common(sp)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("sweep", help="report for every graph of a graph6 stream")
    sp.add_argument("--graph", help="graph6 file, '-' or omitted for stdin")
    sp.add_argument("--threads", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("oracle-check", help="solvers vs brute force on all connected graphs")
    sp.add_argument("--min-n", type=int, default=2)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--central", action="store_true", help="check on C(G) instead of G")
    common(sp)
    sp.set_defaults(func=cmd_oracle_check)

    sp = sub.add_parser("enumerate", help="graph6 stream of all graphs of one order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--min-degree", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", None) is not None and args.cap < 1:
        parser.error("--cap must be positive")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except (UsageError, TDCError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

import json
import threading

import pytest
from hypothesis import given, settings

from centraltdc.errors import ParseError
from centraltdc.graph import FamilySpec, Graph, build_family, complete_graph, cycle_graph, disjoint_union, path_graph
from centraltdc.report import (
    Entry,
    TheoremReport,
    ValueCache,
    parse_report,
    recheck,
    serialize_report,
    theorem_report,
)

from test_graph import random_graphs


def report(text, **kw):
    spec = FamilySpec.parse(text)
    return theorem_report(build_family(spec), family=spec, **kw)


def test_complete_six_characterization():
    e = report("complete:6").entry("central_complete_characterization")
    assert e.holds and (e.lhs, e.rhs, e.condition) == (9, 9, True)


def test_complete_five_formula_entry():
    r = report("complete:5")
    e = r.entry("central_complete_characterization")
    assert (e.lhs, e.rhs) == (8, 8)
    assert r.entry("family_formula").holds and r.entry("family_formula_gamma_t").lhs == 7


def test_path_four_longest_path_entry():
    e = report("path:4").entry("central_longest_path_bounds")
    assert (e.lhs, e.value, e.rhs, e.holds) == (3, 4, 6, True)


def test_union_entries():
    r = theorem_report(disjoint_union([complete_graph(2)] * 2))
    e = r.entry("central_union_bounds")
    assert (e.lhs, e.value, e.rhs) == (3, 3, 5)
    assert r.entry("central_union_construction").lhs == 3
    assert not r.entry("tdc_sandwich").applicable
    assert "connected" in r.entry("tdc_sandwich").note


def test_join_entry_on_cycle_five():
    e = report("cycle:5").entry("join_empty_sandwich_t1")
    assert (e.lhs, e.value, e.rhs) == (6, 7, 7)


def test_nordhaus_gaddum_uses_squares():
    e = theorem_report(cycle_graph(5)).entry("nordhaus_gaddum_chromatic_lower")
    assert (e.lhs, e.value, e.rhs) == (20, 6, 36)


def test_total_domination_exception_orders_skipped():
    e = theorem_report(cycle_graph(5)).entry("total_domination_4n7")
    assert not e.applicable
    assert theorem_report(cycle_graph(7)).entry("total_domination_4n7").holds


def test_single_vertex():
    r = theorem_report(Graph.empty(1))
    assert r.ok
    assert [e.theorem for e in r.entries if e.applicable] == [
        "nordhaus_gaddum_chromatic_lower", "nordhaus_gaddum_chromatic_upper"]


def test_budget_skips_instead_of_failing():
    r = report("wheel:8", budget=-1.0, cache=ValueCache())
    skipped = [e for e in r.entries if e.skipped]
    assert skipped and r.ok
    assert all(e.holds is None and "[" in e.note for e in skipped if "over budget" in e.note)


@settings(max_examples=25, deadline=None)
@given(random_graphs(min_n=1, max_n=6))
def test_entries_recheck_and_hold(g):
    r = theorem_report(g)
    for e in r.entries:
        assert e.holds == recheck(e)
        if not e.applicable:
            assert e.note.startswith("requires")
    assert r.ok, [e for e in r.violations]


def test_recheck_detects_tampering():
    e = Entry("x", True, lhs=1, rhs=5, value=7, relation="between")
    assert recheck(e) is False
    e = Entry("x", True, lhs=4, rhs=4, relation="iff", condition=False)
    assert recheck(e) is False


def test_serialization_roundtrip_and_key_order():
    r = report("path:5")
    raw = serialize_report(r)
    body = json.loads(raw)
    assert list(body) == ["graph", "entries"]
    assert list(body["entries"][0])[:7] == ["theorem", "applicable", "lhs", "rhs", "holds", "note", "skipped"]
    assert parse_report(raw) == r


def test_serialization_empty_and_single():
    empty = TheoremReport({"n": 1, "m": 0, "graph6": "@", "family": None})
    assert json.loads(serialize_report(empty))["entries"] == []
    single = TheoremReport(empty.graph, [Entry("t", True, 1, 2, True, "", False, "le")])
    assert parse_report(serialize_report(single)) == single


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_report(b"{")
    with pytest.raises(ParseError):
        parse_report(b'{"graph": {}}')


def test_cache_shared_between_reports_and_threads():
    cache = ValueCache()
    graphs = [path_graph(n) for n in range(3, 8)]

    def work():
        for g in graphs:
            theorem_report(g, cache=cache)

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    size = len(cache)
    theorem_report(path_graph(5), cache=cache)
    assert len(cache) == size and cache.hits > 0

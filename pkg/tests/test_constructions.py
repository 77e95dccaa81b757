import math

import pytest

from centraltdc.census import graphs, trees
from centraltdc.central import central
from centraltdc.coloring import Coloring, is_tdc, is_tds
from centraltdc.constructions import (
    complement_central_graph,
    construct_tdc_central,
    construct_tdc_central_join_empty,
    construct_tdc_central_longest_path,
    construct_tdc_central_union,
    construct_tdc_complement_central,
    construct_tds_central_complete,
    reduced_path,
    transfer_coloring,
)
from centraltdc.errors import MalformedColoringError, ParameterError
from centraltdc.formulas import formula_value
from centraltdc.graph import (
    FamilySpec,
    Graph,
    build_family,
    classify,
    complete_graph,
    cycle_graph,
    disjoint_union,
    join,
    longest_path_order,
    path_graph,
)
from centraltdc.solvers import tdc_number

GRID = (
    [f"path:{n}" for n in range(2, 13)]
    + [f"cycle:{n}" for n in range(3, 13)]
    + [f"complete:{n}" for n in range(2, 9)]
    + [f"wheel:{n}" for n in range(3, 10)]
    + [f"bipartite:{m},{n}" for m in range(1, 6) for n in range(m, 11 - m)]
    + [f"multipartite:{p}" for p in ("1,1,1", "1,1,2", "1,2,2", "2,2,2", "3,3,3", "1,1,1,1", "1,1,1,1,1",
                                      "1,2,3", "1,1,3", "2,3,3", "1,1,1,2", "1,2,2,2", "1,2,2,3", "1,1,2,2")]
    + [f"double_star:{n}" for n in range(1, 5)]
    + [f"kn_minus_matching:{n}" for n in range(4, 9)]
)


@pytest.mark.parametrize("text", GRID)
def test_family_constructions_are_certified(text):
    spec = FamilySpec.parse(text)
    cg, col = construct_tdc_central(spec)
    assert cg.base == build_family(spec)
    assert is_tdc(cg.result, col)
    assert col.num_classes == formula_value(spec)


@pytest.mark.parametrize(
    "text,classes",
    [("path:8", 6), ("cycle:8", 7), ("complete:6", 9), ("bipartite:3,5", 8), ("multipartite:3,3,3", 9), ("double_star:3", 6)],
)
def test_known_optimal_class_counts(text, classes):
    assert construct_tdc_central(FamilySpec.parse(text))[1].num_classes == classes


@pytest.mark.parametrize("text", [t for t in GRID if central(build_family(FamilySpec.parse(t))).result.n <= 24])
def test_constructions_are_optimal(text):
    cg, col = construct_tdc_central(FamilySpec.parse(text))
    assert tdc_number(cg.result).value == col.num_classes


@pytest.mark.parametrize("text", ["path:1", "complete:1", "multipartite:4", "empty:3"])
def test_out_of_range(text):
    with pytest.raises(ParameterError):
        construct_tdc_central(FamilySpec.parse(text))


@pytest.mark.parametrize("n", range(2, 11))
def test_tds_of_central_complete(n):
    s = construct_tds_central_complete(n)
    assert is_tds(central(complete_graph(n)).result, s)
    assert len(s) == n + math.ceil(n / 2) - 1


def test_tds_range():
    with pytest.raises(ParameterError):
        construct_tds_central_complete(1)


class TestLongestPath:
    def test_examples(self):
        c = construct_tdc_central_longest_path(path_graph(5), [0, 1, 2, 3, 4])
        assert is_tdc(central(path_graph(5)).result, c) and c.num_classes <= 8
        c = construct_tdc_central_longest_path(cycle_graph(6), list(range(6)))
        assert is_tdc(central(cycle_graph(6)).result, c) and c.num_classes <= 9
        k4e = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        p = reduced_path(k4e)
        c = construct_tdc_central_longest_path(k4e, p, reduced=True)
        assert is_tdc(central(k4e).result, c) and c.num_classes == 5

    def test_all_connected_graphs(self):
        for n in range(2, 8):
            for g in graphs(n, connected=True):
                t = longest_path_order(g)
                c = construct_tdc_central_longest_path(g)
                assert is_tdc(central(g).result, c)
                assert c.num_classes <= n + math.ceil(t / 2)
                p = reduced_path(g) if not classify(g).is_complete else None
                if p is not None:
                    c = construct_tdc_central_longest_path(g, p, reduced=True)
                    assert c.num_classes <= n + math.ceil(t / 2) - 1

    @pytest.mark.parametrize("path", [[0, 2], [0, 1, 0], [0, 9]])
    def test_bad_paths(self, path):
        with pytest.raises(ParameterError):
            construct_tdc_central_longest_path(path_graph(4), path)

    def test_reduced_needs_nonadjacent_ends(self):
        with pytest.raises(ParameterError):
            construct_tdc_central_longest_path(cycle_graph(5), list(range(5)), reduced=True)

    def test_disconnected(self):
        with pytest.raises(ParameterError):
            construct_tdc_central_longest_path(disjoint_union([path_graph(2)] * 2))


class TestUnion:
    @pytest.mark.parametrize(
        "parts,classes",
        [
            ((complete_graph(2), complete_graph(2)), 3),
            ((complete_graph(3), complete_graph(3)), 5),
            ((path_graph(3), cycle_graph(4)), 6),
            ((path_graph(2), cycle_graph(5), complete_graph(4)), 9),
        ],
    )
    def test_examples(self, parts, classes):
        c = construct_tdc_central_union(parts)
        assert c.num_classes == classes
        assert is_tdc(central(disjoint_union(parts)).result, c)

    def test_edge_not_at_the_end(self):
        g = Graph.from_edges(3, [(0, 1), (0, 2)])
        c = construct_tdc_central_union([g, g])
        assert is_tdc(central(disjoint_union([g, g])).result, c)

    def test_errors(self):
        with pytest.raises(ParameterError):
            construct_tdc_central_union([complete_graph(2)])
        with pytest.raises(ParameterError):
            construct_tdc_central_union([complete_graph(2), Graph.empty(1)])


class TestJoin:
    @pytest.mark.parametrize("g,t,total", [(cycle_graph(5), 1, 7), (complete_graph(2), 2, 5), (path_graph(4), 1, 6)])
    def test_examples(self, g, t, total):
        base = tdc_number(central(g).result).witness
        c = construct_tdc_central_join_empty(g, t, base)
        assert c.num_classes == base.num_classes + t + 1 == total
        assert is_tdc(central(join(g, Graph.empty(t))).result, c)

    def test_invalid_base(self):
        g = path_graph(3)
        with pytest.raises(ParameterError):
            construct_tdc_central_join_empty(g, 1, Coloring((0, 0, 0, 1, 1)))


class TestComplement:
    def test_trees(self):
        for n in range(4, 9):
            for g in trees(n):
                c = construct_tdc_complement_central(g)
                assert c.num_classes == n and is_tdc(complement_central_graph(g), c)

    def test_non_trees(self):
        for n in range(4, 7):
            for g in graphs(n, connected=True):
                if g.m >= n:
                    c = construct_tdc_complement_central(g)
                    assert c.num_classes == g.m and is_tdc(complement_central_graph(g), c)

    def test_cycle_four(self):
        assert construct_tdc_complement_central(cycle_graph(4)).num_classes == 4

    def test_errors(self):
        with pytest.raises(ParameterError):
            construct_tdc_complement_central(path_graph(3))
        with pytest.raises(ParameterError):
            construct_tdc_complement_central(disjoint_union([path_graph(2)] * 2))


def test_transfer_coloring_along_isomorphism():
    g = path_graph(5)
    perm = [4, 3, 2, 1, 0]
    src = central(g)
    col = tdc_number(src.result).witness
    dst = central(g.relabel(perm))
    moved = transfer_coloring(src, col, perm, dst)
    assert is_tdc(dst.result, moved) and moved.num_classes == col.num_classes


def test_six_class_wheel_five_coloring_is_rejected():
    cg = central(build_family(FamilySpec.parse("wheel:5")))
    c = cg.subdivision_index
    classes = [[0, 1], [2, 3], [4], [5],
               [c(1, 5), c(1, 2), c(2, 3), c(3, 4), c(4, 5)],
               [c(0, i) for i in range(1, 6)]]
    verdict = is_tdc(cg.result, Coloring.from_classes(classes, cg.result.n))
    assert not verdict and verdict.kind == "undominated"
    assert tdc_number(cg.result).value == 7


def test_eight_class_complete_six_listing_leaves_a_vertex_uncolored():
    cg = central(complete_graph(6))
    c = cg.subdivision_index
    big = [c(i, j) for i in (0, 1) for j in range(2, 6)] + [c(2, 4), c(2, 5), c(3, 4), c(3, 5)]
    classes = [[0], [c(2, 3)], [2], [3], [c(0, 1)], [c(4, 5)], [4, 5], big]
    with pytest.raises(MalformedColoringError, match="vertex 1"):
        Coloring.from_classes(classes, cg.result.n)

"""Colorings, properness and total-dominator verification, exact chromatic number."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BudgetExceeded, CapacityError, MalformedColoringError, UndefinedError
from .graph import Graph, bits

CHROMATIC_CAP = 64


@dataclass(frozen=True)
class Coloring:
    """Vertex ``v`` belongs to class ``assignment[v]``; classes are ``0..k-1``,
    all nonempty."""

    assignment: tuple[int, ...]

    def __post_init__(self):
        used = set(self.assignment)
        if used != set(range(len(used))):
            raise MalformedColoringError(
                f"class indices must be contiguous from 0, got {sorted(used)}"
            )

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], n: int | None = None) -> Coloring:
        """Build from a list of vertex sets; empty sets are dropped."""
        classes = [sorted(c) for c in classes]
        classes = [c for c in classes if c]
        size = n if n is not None else sum(len(c) for c in classes)
        assignment = [-1] * size
        for k, members in enumerate(classes):
            for v in members:
                if not 0 <= v < size:
                    raise MalformedColoringError(f"vertex {v} out of range for order {size}")
                if assignment[v] != -1:
                    raise MalformedColoringError(f"vertex {v} appears in two classes")
                assignment[v] = k
        if -1 in assignment:
            raise MalformedColoringError(f"vertex {assignment.index(-1)} is not colored")
        return cls(tuple(assignment))

    @classmethod
    def normalized(cls, labels: Sequence[int]) -> Coloring:
        """Relabel arbitrary class labels to ``0..k-1`` by first appearance."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(x, len(remap)) for x in labels))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def num_classes(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0

    @property
    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    def class_masks(self) -> list[int]:
        out = [0] * self.num_classes
        for v, c in enumerate(self.assignment):
            out[c] |= 1 << v
        return out


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check. Falsy on failure; ``kind`` names the failure."""

    ok: bool
    kind: str | None = None
    edge: tuple[int, int] | None = None
    vertex: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.edge is not None:
            return f"{self.kind}: edge {self.edge[0]}-{self.edge[1]} is monochromatic"
        return f"{self.kind}: vertex {self.vertex}"


@dataclass
class SolveResult:
    """Exact value of an invariant with a certified witness.

    ``witness`` is a Coloring for chi and tdc, a sorted vertex list for
    gammat.
    """

    invariant: str
    value: int
    witness: object
    nodes: int = 0
    elapsed: float = 0.0
    lower_bound: int = 0
    upper_bound: int = 0
    extra: dict = field(default_factory=dict)


def _check_total(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise MalformedColoringError(f"coloring covers {c.n} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Coloring) -> Verdict:
    _check_total(g, c)
    a = c.assignment
    for i, j in g.edges:
        if a[i] == a[j]:
            return Verdict(False, "improper", edge=(i, j))
    return Verdict(True)


def dominated_classes(g: Graph, c: Coloring, v: int) -> set[int]:
    """Indices ``k`` whose class lies inside the open neighbourhood of ``v``."""
    _check_total(g, c)
    nbrs = g.adj[v]
    return {k for k, mask in enumerate(c.class_masks()) if mask & ~nbrs == 0}


def is_tdc(g: Graph, c: Coloring) -> Verdict:
    """Total dominator coloring check: proper, and every vertex is adjacent to
    every member of some class."""
    _check_total(g, c)
    if g.min_degree == 0:
        raise UndefinedError("total dominator colorings need minimum degree >= 1")
    verdict = is_proper(g, c)
    if not verdict:
        return verdict
    masks = c.class_masks()
    for v in range(g.n):
        nbrs = g.adj[v]
        if not any(mask & ~nbrs == 0 for mask in masks):
            return Verdict(False, "undominated", vertex=v)
    return Verdict(True)


def is_tds(g: Graph, vertices: Iterable[int]) -> Verdict:
    """Total dominating set check: every vertex has a neighbour in the set."""
    s = 0
    for v in vertices:
        s |= 1 << v
    for v in range(g.n):
        if not g.adj[v] & s:
            return Verdict(False, "undominated", vertex=v)
    return Verdict(True)


# ---------------------------------------------------------- chromatic number


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from every start vertex; the largest wins."""
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(bits(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur(g: Graph) -> list[int]:
    """Greedy DSATUR coloring (labels from 0)."""
    n = g.n
    color = [-1] * n
    nbr_colors = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (nbr_colors[u].bit_count(), g.adj[u].bit_count(), -u),
        )
        c = 0
        while nbr_colors[v] >> c & 1:
            c += 1
        color[v] = c
        for u in bits(g.adj[v]):
            nbr_colors[u] |= 1 << c
    return color


def chromatic_number(
    g: Graph, cap: int = CHROMATIC_CAP, deadline: float | None = None
) -> SolveResult:
    """Exact chromatic number by DSATUR branch and bound.

    The incumbent starts from greedy DSATUR and the search stops as soon as
    it meets the greedy-clique lower bound.
    """
    if g.n > cap:
        raise CapacityError(f"chromatic number is capped at order {cap}, got {g.n}")
    start = time.perf_counter()
    n, adj = g.n, g.adj
    lower = max(len(greedy_clique(g)), 1)
    best_colors = dsatur(g)
    best = [max(best_colors) + 1]
    nodes = 0

    color = [-1] * n
    nbr_colors = [0] * n

    def search(colored: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes & 1023 == 0 and time.perf_counter() > deadline:
            raise BudgetExceeded(lower, best[0], Coloring.normalized(best_colors))
        if colored == n:
            best[0] = used
            best_colors[:] = color
            return used <= lower
        v = -1
        key = (-1, -1)
        for u in range(n):
            if color[u] < 0:
                k = (nbr_colors[u].bit_count(), adj[u].bit_count())
                if k > key:
                    key, v = k, u
        for c in range(min(used + 1, best[0] - 1)):
            if nbr_colors[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            for u in bits(adj[v]):
                if not nbr_colors[u] >> c & 1:
                    nbr_colors[u] |= 1 << c
                    touched.append(u)
            done = search(colored + 1, max(used, c + 1))
            for u in touched:
                nbr_colors[u] &= ~(1 << c)
            color[v] = -1
            if done:
                return True
        return False

    if best[0] > lower:
        search(0, 0)
    witness = Coloring.normalized(best_colors)
    if not is_proper(g, witness):
        raise AssertionError("chromatic search produced an improper witness")
    return SolveResult(
        "chi",
        witness.num_classes,
        witness,
        nodes=nodes,
        elapsed=time.perf_counter() - start,
        lower_bound=witness.num_classes,
        upper_bound=witness.num_classes,
    )

"""Simple undirected graphs on vertices ``0..n-1``, family generators and
structural operations.

Adjacency is stored as one integer bitmask per vertex, so neighbourhood
intersections and subset tests are single integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapacityError, ParameterError

LONGEST_PATH_CAP = 32


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("a graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ParameterError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ParameterError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ParameterError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ParameterError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 1:
            raise ParameterError("a graph needs at least one vertex")
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ParameterError(f"edge ({i}, {j}) out of range for order {n}")
            if i == j:
                raise ParameterError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ParameterError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[i], perm[j]) for i, j in self.edges))

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: k for k, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )


# ---------------------------------------------------------------- families

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "wheel",
    "complete_multipartite",
    "double_star",
    "kn_minus_matching",
    "empty",
)

_ALIASES = {
    "multipartite": "complete_multipartite",
    "bipartite": "complete_multipartite",
    "complete_bipartite": "complete_multipartite",
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters.

    ``wheel:n`` is the wheel of order ``n + 1``; ``double_star:n`` has
    ``2n + 1`` vertices; ``complete_multipartite`` takes the part sizes in
    ascending order.
    """

    family: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        p = self.params
        if self.family == "complete_multipartite":
            if not p:
                raise ParameterError("complete_multipartite needs at least one part size")
            if any(x < 1 for x in p):
                raise ParameterError("part sizes must be >= 1")
            if list(p) != sorted(p):
                raise ParameterError("part sizes must be sorted ascending")
            return
        if len(p) != 1:
            raise ParameterError(f"{self.family} takes exactly one parameter")
        (n,) = p
        minimum = {
            "path": 1,
            "cycle": 3,
            "complete": 1,
            "wheel": 3,
            "double_star": 1,
            "kn_minus_matching": 4,
            "empty": 1,
        }[self.family]
        if n < minimum:
            raise ParameterError(f"{self.family} requires n >= {minimum}, got {n}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"name:a,b,..."``, e.g. ``path:8`` or ``bipartite:3,5``."""
        name, _, rest = text.strip().partition(":")
        name = name.strip().lower().replace("-", "_")
        try:
            params = tuple(int(x) for x in rest.split(",") if x.strip())
        except ValueError as exc:
            raise ParameterError(f"bad family parameters in {text!r}") from exc
        if name in ("bipartite", "complete_bipartite") and len(params) != 2:
            raise ParameterError("bipartite takes two part sizes")
        name = _ALIASES.get(name, name)
        if name == "complete_multipartite":
            params = tuple(sorted(params))
        return cls(name, params)

    @property
    def n(self) -> int:
        """Order of the graph the spec describes."""
        p = self.params
        if self.family == "complete_multipartite":
            return sum(p)
        if self.family == "wheel":
            return p[0] + 1
        if self.family == "double_star":
            return 2 * p[0] + 1
        return p[0]

    @property
    def singleton_parts(self) -> int:
        """Number of parts of size one (multipartite only)."""
        if self.family != "complete_multipartite":
            raise ParameterError("singleton_parts is defined for complete_multipartite only")
        return sum(1 for x in self.params if x == 1)

    def __str__(self) -> str:
        return f"{self.family}:{','.join(map(str, self.params))}"


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def wheel_graph(n: int) -> Graph:
    """Wheel of order n+1: hub 0, rim 1..n in cyclic order."""
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)] + rim)


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive index blocks in the given order."""
    part = []
    for k, size in enumerate(sizes):
        part += [k] * size
    n = len(part)
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if part[i] != part[j]))


def double_star_graph(n: int) -> Graph:
    """Center 0, middle vertices 1..n, leaf n+i hanging off middle vertex i."""
    return Graph.from_edges(2 * n + 1, [(0, i) for i in range(1, n + 1)] + [(i, n + i) for i in range(1, n + 1)])


def kn_minus_matching_graph(n: int) -> Graph:
    """K_n without the edges 0-3, 2i-2i+1, and additionally 3-(n-1) for odd n.

    In 1-based names: remove v1v4, the matching v1v2, v3v4, ..., and for odd
    n also v4vn.
    """
    removed = {(0, 3)} | {(2 * i, 2 * i + 1) for i in range(n // 2)}
    if n % 2:
        removed.add((3, n - 1))
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in removed))


def build_family(spec: FamilySpec) -> Graph:
    """Canonical labeled graph for a family spec."""
    f, p = spec.family, spec.params
    if f == "path":
        return path_graph(p[0])
    if f == "cycle":
        return cycle_graph(p[0])
    if f == "complete":
        return complete_graph(p[0])
    if f == "wheel":
        return wheel_graph(p[0])
    if f == "complete_multipartite":
        return complete_multipartite_graph(p)
    if f == "double_star":
        return double_star_graph(p[0])
    if f == "kn_minus_matching":
        return kn_minus_matching_graph(p[0])
    return Graph.empty(p[0])


# -------------------------------------------------------------- operations


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Union with the vertices of ``gs[k]`` shifted past those of ``gs[:k]``."""
    if not gs:
        raise ParameterError("disjoint_union needs at least one graph")
    adj: list[int] = []
    offset = 0
    for g in gs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """g and h side by side plus every g-h pair; h is shifted by ``g.n``."""
    gmask = g.full_mask
    hmask = h.full_mask << g.n
    adj = [row | hmask for row in g.adj] + [(row << g.n) | gmask for row in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(bits(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` through ``allowed`` (start included)."""
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def longest_path(g: Graph, cap: int = LONGEST_PATH_CAP) -> list[int]:
    """A longest simple path (as a vertex list), by exhaustive search.

    States ``(visited, end)`` are explored at most once: the best extension
    from a state depends only on the state, and pruning only discards states
    that cannot beat the incumbent, which never decreases.
    """
    if g.n > cap:
        raise CapacityError(f"longest path search is capped at order {cap}, got {g.n}")
    adj = g.adj
    target = max(len(c) for c in components(g))
    best: list[int] = [0]
    seen: set[tuple[int, int]] = set()
    path: list[int] = []

    def extend(mask: int, end: int) -> bool:
        key = (mask, end)
        if key in seen:
            return False
        seen.add(key)
        if len(path) > len(best):
            best[:] = path
            if len(best) == target:
                return True
        free = ~mask
        room = _reach(adj, end, free).bit_count() - 1
        if len(path) + room <= len(best):
            return False
        for u in bits(adj[end] & free):
            path.append(u)
            if extend(mask | 1 << u, u):
                return True
            path.pop()
        return False

    for v in range(g.n):
        path[:] = [v]
        if extend(1 << v, v):
            break
    return best


def longest_path_order(g: Graph, cap: int = LONGEST_PATH_CAP) -> int:
    """Number of vertices on a longest simple path."""
    return len(longest_path(g, cap))


@dataclass(frozen=True)
class Structure:
    is_complete: bool
    is_complete_bipartite: bool
    is_complete_multipartite: bool
    parts: tuple[int, ...] | None
    is_tree: bool
    is_connected: bool
    min_degree: int
    max_degree: int


def classify(g: Graph) -> Structure:
    """Structure tags. Complete multipartite graphs are recognised by their
    complement being a disjoint union of cliques; ``parts`` is sorted."""
    n, m = g.n, g.m
    conn = is_connected(g)
    comp = complement(g)
    parts = None
    pieces = components(comp)
    if all(comp.adj[v] | (1 << v) == sum(1 << u for u in piece) for piece in pieces for v in piece):
        parts = tuple(sorted(len(piece) for piece in pieces))
    degs = g.degrees()
    return Structure(
        is_complete=m == n * (n - 1) // 2,
        is_complete_bipartite=parts is not None and len(parts) == 2,
        is_complete_multipartite=parts is not None,
        parts=parts,
        is_tree=conn and m == n - 1,
        is_connected=conn,
        min_degree=min(degs),
        max_degree=max(degs),
    )

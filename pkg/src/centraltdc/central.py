"""The central graph operator with vertex provenance.

C(G) subdivides every edge of G once and joins every pair of originally
non-adjacent vertices. Original vertices keep their indices ``0..n-1``; the
subdivision vertex of edge ``(i, j)``, ``i < j``, sits at ``n + k`` where
``k`` is the rank of ``(i, j)`` in lexicographic edge order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph


@dataclass(frozen=True)
class CentralGraph:
    base: Graph
    result: Graph
    subdivisions: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return self.base.n

    def original_index(self, i: int) -> int:
        if not 0 <= i < self.base.n:
            raise ParameterError(f"no original vertex {i}")
        return i

    def subdivision_index(self, i: int, j: int) -> int:
        """Vertex of ``result`` on base edge {i, j}; raises if not an edge."""
        key = (min(i, j), max(i, j))
        try:
            return self.base.n + self._edge_rank[key]
        except KeyError:
            raise ParameterError(f"({i}, {j}) is not an edge of the base graph") from None

    def has_subdivision(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_rank

    @property
    def _edge_rank(self) -> dict[tuple[int, int], int]:
        rank = self.__dict__.get("_rank")
        if rank is None:
            rank = {e: k for k, e in enumerate(self.subdivisions)}
            object.__setattr__(self, "_rank", rank)
        return rank

    @property
    def subdivision_mask(self) -> int:
        return self.result.full_mask & ~self.base.full_mask

    def role(self, v: int) -> str:
        """``"original:i"`` or ``"subdiv:i,j"``."""
        if v < self.base.n:
            return f"original:{v}"
        i, j = self.subdivisions[v - self.base.n]
        return f"subdiv:{i},{j}"

    def recover_base(self) -> Graph:
        return Graph.from_edges(self.base.n, self.subdivisions)


def central(g: Graph) -> CentralGraph:
    n = g.n
    edges = g.edges
    total = n + len(edges)
    adj = [0] * total
    full = g.full_mask
    for v in range(n):
        adj[v] = full & ~g.adj[v] & ~(1 << v)
    for k, (i, j) in enumerate(edges):
        c = n + k
        adj[c] = (1 << i) | (1 << j)
        adj[i] |= 1 << c
        adj[j] |= 1 << c
    return CentralGraph(base=g, result=Graph(total, tuple(adj)), subdivisions=tuple(edges))

"""Isomorph-free enumeration of small graphs.

Graphs of order n are grown from those of order n-1 by adding one vertex
and keeping the first representative of each nauty certificate. With a
minimum-degree requirement d the new vertex is taken to be a vertex of
minimum degree, which restricts both the parents (min degree >= d-1) and
the neighbour sets of the new vertex.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import pynauty

from .errors import ParameterError
from .graph import Graph, bits, is_connected

ENUMERATION_CAP = 10


def _certificate(n: int, adj: tuple[int, ...]) -> bytes:
    g = pynauty.Graph(n, adjacency_dict={v: bits(adj[v]) for v in range(n)})
    return pynauty.certificate(g)


def _attach(adj: tuple[int, ...], nbrs: int) -> tuple[int, ...]:
    n = len(adj)
    return tuple(row | ((nbrs >> v & 1) << n) for v, row in enumerate(adj)) + (nbrs,)


@lru_cache(maxsize=None)
def _graphs(n: int, min_degree: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),) if min_degree <= 0 else ()
    seen: dict[bytes, tuple[int, ...]] = {}
    if min_degree <= 0:
        for adj in _graphs(n - 1, 0):
            for nbrs in range(1 << (n - 1)):
                new = _attach(adj, nbrs)
                seen.setdefault(_certificate(n, new), new)
        return tuple(seen.values())
    for adj in _graphs(n - 1, min_degree - 1):
        degs = [row.bit_count() for row in adj]
        low = min(degs)
        for d in range(min_degree, min(low + 1, n - 1) + 1):
            forced = sum(1 << v for v, x in enumerate(degs) if x == d - 1)
            if forced.bit_count() > d:
                continue
            free = [v for v, x in enumerate(degs) if x >= d]
            for extra in combinations(free, d - forced.bit_count()):
                nbrs = forced | sum(1 << v for v in extra)
                new = _attach(adj, nbrs)
                seen.setdefault(_certificate(n, new), new)
    return tuple(seen.values())


def graphs(n: int, *, connected: bool = False, min_degree: int = 0) -> list[Graph]:
    """All graphs of order ``n`` up to isomorphism, optionally filtered."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ParameterError(f"enumeration supports orders 1..{ENUMERATION_CAP}, got {n}")
    out = [Graph(n, adj) for adj in _graphs(n, max(min_degree, 0))]
    if connected:
        out = [g for g in out if is_connected(g)]
    return out


def trees(n: int) -> list[Graph]:
    return [g for g in graphs(n, connected=True) if g.m == n - 1]

"""Explicit total dominator colorings and total dominating sets.

Every function returns colorings of the graphs built by :mod:`graph` and
:mod:`central`, with their fixed labelings. Inside a construction, ``v(k)``
is the k-th original vertex counted from 1 and ``c(i, j)`` the subdivision
vertex of the edge between ``v(i)`` and ``v(j)``; both are translated to
0-based indices immediately.

The class counts are the point of these constructions; validity is checked
by the verifiers in :mod:`coloring`, not assumed.
"""

from __future__ import annotations

from typing import Sequence

from .central import CentralGraph, central
from .coloring import Coloring, is_tdc
from .errors import ParameterError
from .graph import (
    FamilySpec,
    Graph,
    bits,
    build_family,
    classify,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    join,
    longest_path,
)


def _coloring(total: int, classes: list[list[int]]) -> Coloring:
    return Coloring.from_classes(classes, total)


def _subdivision_class(cg: CentralGraph, exclude: set[int] = frozenset()) -> list[int]:
    return [v for v in range(cg.n, cg.result.n) if v not in exclude]


def transfer_coloring(src: CentralGraph, coloring: Coloring, perm: Sequence[int], dst: CentralGraph) -> Coloring:
    """Carry a coloring of ``src.result`` across the base isomorphism ``perm``
    (base vertex ``v`` of src is ``perm[v]`` in dst)."""
    labels = [0] * dst.result.n
    for v in range(src.n):
        labels[perm[v]] = coloring.assignment[v]
    for k, (i, j) in enumerate(src.subdivisions):
        labels[dst.subdivision_index(perm[i], perm[j])] = coloring.assignment[src.n + k]
    return Coloring.normalized(labels)


# ------------------------------------------------------------ families


def _path(cg: CentralGraph, n: int) -> Coloring:
    total = cg.result.n
    c = cg.subdivision_index
    if n == 2:
        return _coloring(total, [[0, 1], [c(0, 1)]])
    if n == 3:
        # C(P3) is a 5-cycle
        return _coloring(total, [[0], [c(0, 1)], [1, 2], [c(1, 2)]])
    if n == 4:
        # the general n = 1 (mod 3) labeling leaves v3 undominated here
        return _coloring(total, [[0, 1], [2], [3, c(0, 1), c(1, 2)], [c(2, 3)]])
    labels = []
    third = n // 3
    for i in range(1, n + 1):
        if n % 3 == 1 or n == 5:
            if i % 3 == 0:
                labels.append(2 * (i // 3))
            elif i == n:
                labels.append(n - third)
            else:
                labels.append(2 * (i // 3) + 1)
        else:
            labels.append(2 * (i // 3) if i % 3 == 0 else 2 * (i // 3) + 1)
    sub = n - third + 1 if (n % 3 == 1 or n == 5) else 2 * n // 3 + 1
    labels += [sub] * (n - 1)
    return Coloring.normalized(labels)


def _triangle(cg: CentralGraph) -> Coloring:
    # C(K3) is a 6-cycle
    c = cg.subdivision_index
    return _coloring(cg.result.n, [[0], [c(1, 2)], [c(0, 1), c(0, 2)], [1, 2]])


def _cycle(cg: CentralGraph, n: int) -> Coloring:
    c = cg.subdivision_index
    if n == 3:
        return _triangle(cg)
    if n == 4:
        return _coloring(cg.result.n, [[0, c(1, 2), c(2, 3)], [1], [2, c(0, 1), c(0, 3)], [3]])
    third = n // 3
    labels = []
    for i in range(1, n + 1):
        if i == n:
            labels.append(n - third)
        elif i % 3 == 0:
            labels.append(2 * (i // 3))
        else:
            labels.append(2 * (i // 3) + 1)
    sub = 2 * n // 3 + 1 if n % 3 == 0 else 2 * n // 3 + 2
    labels += [sub] * n
    return Coloring.normalized(labels)


def _complete(cg: CentralGraph, n: int) -> Coloring:
    c = cg.subdivision_index
    if n == 2:
        return _coloring(cg.result.n, [[0, 1], [c(0, 1)]])
    if n == 3:
        return _triangle(cg)
    classes = [[i] for i in range(n - 2)] + [[n - 2, n - 1]]
    pairs = [(2 * i, 2 * i + 1) for i in range(n // 2)]
    if n % 2:
        pairs.append((n - 2, n - 1))
    singles = [c(i, j) for i, j in pairs]
    classes += [[s] for s in singles]
    classes.append(_subdivision_class(cg, set(singles)))
    return _coloring(cg.result.n, classes)


def _bipartite(cg: CentralGraph, m: int, n: int) -> Coloring:
    total = cg.result.n
    c = lambda i, j: cg.subdivision_index(i - 1, m + j - 1)  # noqa: E731
    v = lambda i: i - 1  # noqa: E731
    u = lambda j: m + j - 1  # noqa: E731
    if (m, n) == (1, 1):
        return _coloring(total, [[v(1), u(1)], [c(1, 1)]])
    if (m, n) == (1, 2):
        # C(K_{1,2}) is a 5-cycle
        return _coloring(total, [[v(1)], [c(1, 1)], [u(1), c(1, 2)], [u(2)]])
    if m == 1:
        classes = [[u(j)] for j in range(1, n)] + [[v(1), u(n)], _subdivision_class(cg)]
        return _coloring(total, classes)
    if m == 2:
        classes = [[u(j)] for j in range(1, n + 1)]
        classes.append([v(1)] + [c(2, j) for j in range(1, n + 1)])
        classes.append([v(2)] + [c(1, j) for j in range(1, n + 1)])
        return _coloring(total, classes)
    classes = [[v(1), u(1)]] + [[u(j)] for j in range(2, n + 1)]
    classes += [[v(i)] for i in range(2, m + 1)]
    classes.append(_subdivision_class(cg))
    return _coloring(total, classes)


def _multipartite(cg: CentralGraph, parts: tuple[int, ...]) -> Coloring:
    n = sum(parts)
    total = cg.result.n
    starts = [sum(parts[:k]) for k in range(len(parts))]
    singletons = sum(1 for x in parts if x == 1)
    if all(x == 2 for x in parts[:-1]):
        single = cg.subdivision_index(1, n - 2)
        classes = [[0, n - 1]] + [[i] for i in range(1, n - 1)] + [[single]]
        classes.append(_subdivision_class(cg, {single}))
        return _coloring(total, classes)
    if singletons == 0:
        a, b = starts[-2], starts[-1]
        classes = [[a, b]] + [[i] for i in range(n) if i not in (a, b)]
        classes.append(_subdivision_class(cg))
        return _coloring(total, classes)
    if singletons == 1:
        if max(parts) >= 3:
            order = [0, starts[-1]] + [i for i in range(1, n) if i != starts[-1]]
            pairs = [(order[0], order[1])]
        else:
            order = list(range(n))
            pairs = [(0, 2)]
    else:
        order = list(range(n))
        pairs = [(2 * i, 2 * i + 1) for i in range(singletons // 2)]
        if singletons % 2:
            last = singletons - 1
            pairs.append((last, last + 1) if last + 1 < n else (n - 2, n - 1))
    classes = [[order[0], order[1]]] + [[order[i]] for i in range(2, n)]
    singles = [cg.subdivision_index(i, j) for i, j in pairs]
    classes += [[s] for s in singles]
    classes.append(_subdivision_class(cg, set(singles)))
    return _coloring(total, classes)


def _double_star(cg: CentralGraph, n: int) -> Coloring:
    c = cg.subdivision_index
    classes = [[i, n + i] for i in range(1, n + 1)]
    classes.append([0])
    classes.append([c(i, n + i) for i in range(1, n + 1)])
    classes.append([c(0, i) for i in range(1, n + 1)])
    return _coloring(cg.result.n, classes)


def _kn_minus_matching(cg: CentralGraph, n: int) -> Coloring:
    classes = [[0], [1, 2]] + [[i] for i in range(3, n)] + [_subdivision_class(cg)]
    return _coloring(cg.result.n, classes)


def construct_tdc_central(spec: FamilySpec) -> tuple[CentralGraph, Coloring]:
    """Explicit TDC of C(G) for a family graph G, with as many classes as the
    family's closed-form value."""
    g = build_family(spec)
    cg = central(g)
    f, p = spec.family, spec.params
    if f == "path":
        if p[0] < 2:
            raise ParameterError("path construction needs n >= 2")
        return cg, _path(cg, p[0])
    if f == "cycle":
        return cg, _cycle(cg, p[0])
    if f == "complete":
        if p[0] < 2:
            raise ParameterError("complete construction needs n >= 2")
        return cg, _complete(cg, p[0])
    if f == "wheel":
        n = p[0]
        if n == 3:
            return cg, _complete(cg, 4)
        cyc = cycle_graph(n)
        cyc_cg = central(cyc)
        joined = construct_tdc_central_join_empty(cyc, 1, _cycle(cyc_cg, n))
        hub_last = central(join(cyc, Graph.empty(1)))
        return cg, transfer_coloring(hub_last, joined, list(range(1, n + 1)) + [0], cg)
    if f == "complete_multipartite":
        if len(p) == 1:
            raise ParameterError("no construction for an edgeless graph")
        if len(p) == 2:
            return cg, _bipartite(cg, *p)
        if sum(p) == 3:
            return cg, _triangle(cg)
        return cg, _multipartite(cg, p)
    if f == "double_star":
        return cg, _double_star(cg, p[0])
    if f == "kn_minus_matching":
        return cg, _kn_minus_matching(cg, p[0])
    raise ParameterError(f"no construction for family {f}")


# ------------------------------------------------------ general graphs


def construct_tds_central_complete(n: int) -> list[int]:
    """A total dominating set of C(K_n) with n + ceil(n/2) - 1 vertices:
    all originals but the last, plus the subdivisions of a cover of the
    originals by disjoint pairs (the last pair overlapping when n is odd)."""
    if n < 2:
        raise ParameterError("needs n >= 2")
    cg = central(complete_graph(n))
    pairs = [(2 * i, 2 * i + 1) for i in range(n // 2)]
    if n % 2:
        pairs.append((n - 2, n - 1))
    return sorted(list(range(n - 1)) + [cg.subdivision_index(i, j) for i, j in pairs])


def construct_tdc_central_longest_path(g: Graph, path: Sequence[int] | None = None, reduced: bool = False) -> Coloring:
    """TDC of C(g) built along a longest path ``v1 v2 ... vt``.

    Default: ``{v1, v2}``, the remaining originals as singletons, the
    subdivisions of ``v1v2, v3v4, ...`` as singletons (plus that of
    ``v(t-1)vt`` for odd t) and everything else in one class, at most
    ``n + ceil(t/2)`` classes.

    ``reduced=True`` pairs ``{v2, v3}`` instead, uses the subdivisions of
    ``v2v3, v4v5, ...`` and needs the first path vertex to be non-adjacent to
    the last-labeled vertex: an off-path vertex when t < n, the other path end
    when t = n. At most ``n + ceil(t/2) - 1`` classes.
    """
    n = g.n
    if n < 2 or not is_connected(g):
        raise ParameterError("needs a connected graph with n >= 2")
    path = list(path) if path is not None else longest_path(g)
    t = len(path)
    if t < 2 or len(set(path)) != t or any(not 0 <= v < n for v in path):
        raise ParameterError("path must be a simple path of at least two vertices")
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        raise ParameterError("consecutive path vertices must be adjacent")
    rest = [v for v in range(n) if v not in set(path)]
    order = path + rest
    if reduced:
        if g.has_edge(order[0], order[-1]):
            raise ParameterError("reduced variant needs the first path vertex non-adjacent to the last vertex")
    cg = central(g)
    c = lambda i, j: cg.subdivision_index(order[i - 1], order[j - 1])  # noqa: E731
    v = lambda i: order[i - 1]  # noqa: E731
    if not reduced:
        classes = [[v(1), v(2)]] + [[v(i)] for i in range(3, n + 1)]
        singles = [c(2 * k - 1, 2 * k) for k in range(1, t // 2 + 1)]
        if t % 2:
            singles.append(c(t - 1, t))
    else:
        classes = [[v(1)], [v(2), v(3)]] + [[v(i)] for i in range(4, n + 1)]
        singles = [c(2 * k, 2 * k + 1) for k in range(1, (t + 1) // 2)]
    classes += [[s] for s in singles]
    classes.append(_subdivision_class(cg, set(singles)))
    coloring = _coloring(cg.result.n, classes)
    if not is_tdc(cg.result, coloring):
        raise ParameterError("the path does not support the construction; use a longest path")
    return coloring


def reduced_path(g: Graph) -> list[int] | None:
    """A longest path usable by the reduced construction, or None.

    If the graph has a Hamiltonian path, one with non-adjacent ends is
    searched for; otherwise any longest path works.
    """
    best = longest_path(g)
    if len(best) < g.n:
        return best
    adj = g.adj
    n = g.n
    found: list[int] = []

    def extend(p: list[int], mask: int) -> bool:
        if len(p) == n:
            if not adj[p[0]] >> p[-1] & 1:
                found[:] = p
                return True
            return False
        for u in bits(adj[p[-1]] & ~mask):
            p.append(u)
            if extend(p, mask | 1 << u):
                return True
            p.pop()
        return False

    for s in range(n):
        if extend([s], 1 << s):
            return found
    return None


def construct_tdc_central_union(gs: Sequence[Graph]) -> Coloring:
    """TDC of C(gs[0] + gs[1] + ...) with n - w + 1 classes.

    Inside each part two adjacent vertices share a class, the other vertices
    are singletons, and all subdivision vertices form one class.
    """
    if len(gs) < 2:
        raise ParameterError("needs at least two components")
    for g in gs:
        if g.n < 2 or g.min_degree < 1:
            raise ParameterError("every component needs order >= 2 and no isolated vertex")
    union = disjoint_union(gs)
    cg = central(union)
    classes = []
    offset = 0
    for g in gs:
        a, b = (g.n - 2, g.n - 1) if g.has_edge(g.n - 2, g.n - 1) else g.edges[0]
        classes += [[offset + v] for v in range(g.n) if v not in (a, b)]
        classes.append([offset + a, offset + b])
        offset += g.n
    classes.append(_subdivision_class(cg))
    return _coloring(cg.result.n, classes)


def construct_tdc_central_join_empty(g: Graph, t: int, base: Coloring) -> Coloring:
    """Extend a TDC of C(g) to C(g joined with t independent vertices): keep
    the base classes, add one class holding every new subdivision vertex and a
    singleton for each added vertex."""
    if g.n < 2 or t < 1:
        raise ParameterError("needs n >= 2 and t >= 1")
    cg = central(g)
    if base.n != cg.result.n or not is_tdc(cg.result, base):
        raise ParameterError("base coloring is not a TDC of the central graph")
    big = central(join(g, Graph.empty(t)))
    k = base.num_classes
    labels = [0] * big.result.n
    for v in range(g.n):
        labels[v] = base.assignment[v]
    for idx, (i, j) in enumerate(cg.subdivisions):
        labels[big.subdivision_index(i, j)] = base.assignment[g.n + idx]
    for i in range(t):
        labels[g.n + i] = k + 1 + i
        for j in range(g.n):
            labels[big.subdivision_index(j, g.n + i)] = k
    return Coloring(tuple(labels))


def _distinct_incident_edges(g: Graph, vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> dict[int, tuple[int, int]]:
    """Assign each listed vertex a distinct incident edge from ``edges``:
    greedily by smallest endpoint sum first, repaired with augmenting paths."""
    match: dict[int, tuple[int, int]] = {}
    owner: dict[tuple[int, int], int] = {}
    incident = {v: sorted((e for e in edges if v in e), key=lambda e: (e[0] + e[1], e)) for v in vertices}
    for v in vertices:
        for e in incident[v]:
            if e not in owner:
                match[v], owner[e] = e, v
                break

    def augment(v: int, seen: set) -> bool:
        for e in incident[v]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                match[v], owner[e] = e, v
                return True
        return False

    for v in vertices:
        if v not in match and not augment(v, set()):
            raise ParameterError(f"vertex {v} cannot get its own incident edge")
    return match


def construct_tdc_complement_central(g: Graph) -> Coloring:
    """TDC of the complement of C(g) for connected g with n >= 4.

    Each original vertex is paired with a distinct incident edge's
    subdivision vertex (which it is not adjacent to in the complement);
    leftover subdivision vertices are singletons. For a tree one edge
    ``v1vn`` with v1 a leaf is set apart as a singleton and the remaining
    edges are handed to all vertices but v1 and one other vertex v2, which
    share a class: n classes. Otherwise m classes.
    """
    n = g.n
    if n < 4 or not is_connected(g):
        raise ParameterError("needs a connected graph with n >= 4")
    cg = central(g)
    total = cg.result.n
    edges = g.edges
    if classify(g).is_tree:
        degs = g.degrees()
        leaf = degs.index(1)
        anchor = bits(g.adj[leaf])[0]
        partner = next(v for v in range(n) if v not in (leaf, anchor))
        # root the rest of the tree at partner; every other vertex takes its parent edge
        parent = {partner: None}
        stack = [partner]
        while stack:
            x = stack.pop()
            for y in bits(g.adj[x]):
                if y not in parent and y != leaf:
                    parent[y] = x
                    stack.append(y)
        classes = [[leaf, partner], [cg.subdivision_index(leaf, anchor)]]
        for y, x in sorted(parent.items()):
            if x is not None:
                classes.append([y, cg.subdivision_index(x, y)])
        return _coloring(total, classes)
    match = _distinct_incident_edges(g, list(range(n)), edges)
    used = set(match.values())
    classes = [[v, cg.subdivision_index(*match[v])] for v in range(n)]
    classes += [[cg.subdivision_index(*e)] for e in edges if e not in used]
    return _coloring(total, classes)


def complement_central_graph(g: Graph) -> Graph:
    return complement(central(g).result)

"""Exact total domination number and total dominator chromatic number.

Both solvers work on neighbourhood bitmasks. The brute-force oracles at the
bottom deliberately share no search code with them: they enumerate subsets
and set partitions and defer every check to :mod:`centraltdc.coloring`.
"""

from __future__ import annotations

import itertools
import time
from typing import Iterator

from .coloring import (
    CHROMATIC_CAP,
    Coloring,
    SolveResult,
    chromatic_number,
    greedy_clique,
    is_tdc,
    is_tds,
)
from .errors import BudgetExceeded, CapacityError, UndefinedError
from .graph import Graph, bits

GAMMA_T_CAP = 40
TDC_CAP = 40
TDC_BRUTEFORCE_CAP = 10
GAMMA_T_BRUTEFORCE_CAP = 16


def _require_positive_min_degree(g: Graph, what: str) -> None:
    if g.min_degree == 0:
        isolated = g.degrees().index(0)
        raise UndefinedError(f"{what} is undefined: vertex {isolated} is isolated")


def _deadline(budget: float | None) -> float | None:
    return None if budget is None else time.perf_counter() + budget


# ------------------------------------------------------- total domination


def greedy_tds(g: Graph) -> list[int]:
    undominated = g.full_mask
    chosen = 0
    while undominated:
        v = max(range(g.n), key=lambda u: ((g.adj[u] & undominated).bit_count(), -u))
        chosen |= 1 << v
        undominated &= ~g.adj[v]
    return bits(chosen)


def total_domination_number(
    g: Graph, cap: int = GAMMA_T_CAP, budget: float | None = None
) -> SolveResult:
    """Exact gamma_t by branch and bound.

    Branching picks the undominated vertex with the fewest remaining
    candidate dominators and tries each candidate in turn, forbidding the
    earlier ones in later branches. The bound is
    ``|S| + ceil(undominated / best single coverage)``.
    """
    _require_positive_min_degree(g, "total domination number")
    if g.n > cap:
        raise CapacityError(f"total domination is capped at order {cap}, got {g.n}")
    start = time.perf_counter()
    deadline = _deadline(budget)
    adj, n = g.adj, g.n
    incumbent = greedy_tds(g)
    best = [len(incumbent), incumbent]
    nodes = 0

    def search(chosen: int, size: int, undominated: int, banned: int) -> None:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes & 1023 == 0 and time.perf_counter() > deadline:
            raise BudgetExceeded(1, best[0], list(best[1]))
        if not undominated:
            best[0], best[1] = size, bits(chosen)
            return
        if size + 1 >= best[0]:
            return
        allowed = ~(chosen | banned)
        cover = 0
        for u in range(n):
            if allowed >> u & 1:
                c = (adj[u] & undominated).bit_count()
                if c > cover:
                    cover = c
        if cover == 0:
            return
        need = -(-undominated.bit_count() // cover)
        if size + need >= best[0]:
            return
        target, fewest = -1, n + 1
        for v in bits(undominated):
            k = (adj[v] & allowed).bit_count()
            if k < fewest:
                target, fewest = v, k
                if k <= 1:
                    break
        if fewest == 0:
            return
        cands = sorted(bits(adj[target] & allowed), key=lambda u: (-(adj[u] & undominated).bit_count(), u))
        extra_ban = 0
        for u in cands:
            search(chosen | 1 << u, size + 1, undominated & ~adj[u], banned | extra_ban)
            extra_ban |= 1 << u

    search(0, 0, g.full_mask, 0)
    witness = sorted(best[1])
    if not is_tds(g, witness):
        raise AssertionError("total domination search produced an invalid witness")
    return SolveResult(
        "gammat",
        len(witness),
        witness,
        nodes=nodes,
        elapsed=time.perf_counter() - start,
        lower_bound=len(witness),
        upper_bound=len(witness),
    )


# ------------------------------------------------ total dominator coloring


def greedy_tdc(g: Graph) -> Coloring:
    """Start from singleton classes and merge non-adjacent class pairs while
    the result stays a total dominator coloring."""
    _require_positive_min_degree(g, "total dominator coloring")
    classes = [1 << v for v in range(g.n)]
    adj = g.adj

    def valid(masks: list[int]) -> bool:
        return all(any(m & ~adj[v] == 0 for m in masks) for v in range(g.n))

    merged = True
    while merged:
        merged = False
        for a in range(len(classes)):
            for b in range(a + 1, len(classes)):
                ca, cb = classes[a], classes[b]
                if any(adj[v] & cb for v in bits(ca)):
                    continue
                trial = classes[:a] + [ca | cb] + classes[a + 1 : b] + classes[b + 1 :]
                if valid(trial):
                    classes = trial
                    merged = True
                    break
            if merged:
                break
    return Coloring.from_classes((bits(m) for m in classes), g.n)


def branching_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


class _TDCSearch:
    """Decision procedure: is there a TDC of ``g`` with at most ``k`` classes?

    Vertices are colored in a fixed order; a new class may only be opened
    with the next free index. Each class keeps the intersection of its
    members' neighbourhoods, i.e. the set of vertices that currently dominate
    it. Those sets only shrink as the class grows, so a vertex outside all of
    them ("needy") can only be served by a class not opened yet, built from
    uncolored neighbours. That yields the pruning bound on classes still to
    be opened.
    """

    def __init__(self, g: Graph, k: int, deadline: float | None, nodes: int = 0):
        self.adj = g.adj
        self.n = g.n
        self.full = g.full_mask
        self.order = branching_order(g)
        self.k = k
        self.deadline = deadline
        self.nodes = nodes
        self.members = [0] * k
        self.common = [0] * k
        self.opened = 0
        self.color = [-1] * g.n
        self.solution: list[int] | None = None

    def run(self) -> bool:
        return self._search(0, self.full)

    def _classes_needed(self, needy: int, uncolored: int) -> int:
        """Lower bound on unopened classes required by the needy vertices,
        or -1 if some needy vertex can no longer be served."""
        adj = self.adj
        taken = 0
        disjoint = 0
        needy_list = bits(needy)
        avail = []
        for v in needy_list:
            a = adj[v] & uncolored
            if not a:
                return -1
            avail.append((a.bit_count(), a))
        avail.sort()
        for _, a in avail:
            if not a & taken:
                taken |= a
                disjoint += 1
        cover = 0
        for w in bits(uncolored):
            c = (adj[w] & needy).bit_count()
            if c > cover:
                cover = c
        by_cover = -(-len(needy_list) // cover)
        return max(disjoint, by_cover)

    def _search(self, pos: int, uncolored: int) -> bool:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise _Timeout
        adj, k = self.adj, self.k
        members, common = self.members, self.common
        opened = self.opened
        dominated = 0
        for c in range(opened):
            dominated |= common[c]
        needy = self.full & ~dominated
        if needy:
            if opened == k:
                return False
            need = self._classes_needed(needy, uncolored)
            if need < 0 or opened + need > k:
                return False
        if pos == self.n:
            self.solution = list(self.color)
            return True
        if opened == k:
            for w in bits(uncolored):
                aw = adj[w]
                for c in range(k):
                    if not members[c] & aw:
                        break
                else:
                    return False
        v = self.order[pos]
        av = adj[v]
        bit = 1 << v
        rest = uncolored & ~bit
        for c in range(opened):
            if members[c] & av:
                continue
            saved_m, saved_c = members[c], common[c]
            members[c] = saved_m | bit
            common[c] = saved_c & av
            self.color[v] = c
            if self._search(pos + 1, rest):
                return True
            members[c], common[c] = saved_m, saved_c
        if opened < k:
            members[opened] = bit
            common[opened] = av
            self.color[v] = opened
            self.opened = opened + 1
            if self._search(pos + 1, rest):
                return True
            self.opened = opened
            members[opened] = 0
            common[opened] = 0
        self.color[v] = -1
        return False


class _Timeout(Exception):
    pass


def tdc_lower_bound(g: Graph, budget: float | None = None) -> tuple[int, dict]:
    """``max{chi, gamma_t, 2}``; chi falls back to the clique bound when the
    graph exceeds the chromatic cap."""
    if g.n <= CHROMATIC_CAP:
        chi = chromatic_number(g, deadline=_deadline(budget)).value
    else:
        chi = len(greedy_clique(g))
    gamma = total_domination_number(g, cap=max(GAMMA_T_CAP, g.n), budget=budget).value
    return max(chi, gamma, 2), {"chi": chi, "gamma_t": gamma}


def tdc_number(g: Graph, cap: int = TDC_CAP, budget: float | None = None) -> SolveResult:
    """Exact total dominator chromatic number with a certified witness.

    The value is bracketed between ``max{chi, gamma_t, 2}`` and a greedy
    coloring, then each candidate ``k`` from the lower end is decided by
    :class:`_TDCSearch`; the first feasible ``k`` is optimal. On timeout,
    :class:`BudgetExceeded` carries the certified interval.
    """
    _require_positive_min_degree(g, "total dominator chromatic number")
    if g.n > cap:
        raise CapacityError(f"tdc search is capped at order {cap}, got {g.n}")
    start = time.perf_counter()
    deadline = _deadline(budget)
    incumbent = greedy_tdc(g)
    upper = incumbent.num_classes
    try:
        lower, parts = tdc_lower_bound(g, budget)
    except BudgetExceeded:
        raise BudgetExceeded(2, upper, incumbent) from None
    nodes = 0
    witness = incumbent
    k = lower
    while k < upper:
        search = _TDCSearch(g, k, deadline, nodes)
        try:
            found = search.run()
        except _Timeout:
            raise BudgetExceeded(k, upper, incumbent) from None
        nodes = search.nodes
        if found:
            witness = Coloring.normalized(search.solution)
            upper = witness.num_classes
            break
        k += 1
    if not is_tdc(g, witness):
        raise AssertionError("tdc search produced an invalid witness")
    return SolveResult(
        "tdc",
        witness.num_classes,
        witness,
        nodes=nodes,
        elapsed=time.perf_counter() - start,
        lower_bound=lower,
        upper_bound=incumbent.num_classes,
        extra=parts,
    )


def tdc_lower_bound_certified(g: Graph, k: int, budget: float | None = None) -> bool:
    """True if the search proves that no TDC with ``k`` classes exists."""
    _require_positive_min_degree(g, "total dominator chromatic number")
    return not _TDCSearch(g, k, _deadline(budget)).run()


# ------------------------------------------------------------ brute force


def gamma_t_bruteforce(g: Graph, cap: int = GAMMA_T_BRUTEFORCE_CAP) -> int:
    """Smallest total dominating set by subset enumeration in increasing size."""
    _require_positive_min_degree(g, "total domination number")
    if g.n > cap:
        raise CapacityError(f"subset oracle is capped at order {cap}, got {g.n}")
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            if is_tds(g, subset):
                return size
    raise AssertionError("the full vertex set is always a TDS when min degree >= 1")


def set_partitions(n: int, blocks: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``n`` using exactly ``blocks`` labels."""
    labels = [0] * n

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if n - i < blocks - used:
            return
        if i == n:
            if used == blocks:
                yield list(labels)
            return
        for b in range(min(used + 1, blocks)):
            labels[i] = b
            yield from rec(i + 1, max(used, b + 1))

    if n == 0:
        return iter(())
    labels[0] = 0
    return rec(1, 1)


def tdc_number_bruteforce(g: Graph, cap: int = TDC_BRUTEFORCE_CAP) -> int:
    """Fewest classes over all set partitions that pass :func:`is_tdc`."""
    _require_positive_min_degree(g, "total dominator chromatic number")
    if g.n > cap:
        raise CapacityError(f"partition oracle is capped at order {cap}, got {g.n}")
    for blocks in range(1, g.n + 1):
        for labels in set_partitions(g.n, blocks):
            if is_tdc(g, Coloring(tuple(labels))):
                return blocks
    raise AssertionError("singleton classes always form a TDC when min degree >= 1")

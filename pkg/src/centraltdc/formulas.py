"""Closed-form values of the total dominator chromatic number of central graphs."""

from __future__ import annotations

from .errors import ParameterError
from .graph import FamilySpec, Graph, classify


class UnsupportedFamily(ParameterError):
    pass


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def formula_value(spec: FamilySpec, gamma: bool = False) -> int:
    """chi_d^t(C(G)) for a family graph G, or gamma_t(C(K_n)) with ``gamma``."""
    f, p = spec.family, spec.params
    if gamma:
        if f == "complete" and p[0] >= 2:
            return p[0] + _ceil_half(p[0]) - 1
        raise UnsupportedFamily(f"no closed form for gamma_t(C(G)) with G = {spec}")
    if f == "path" and p[0] >= 2:
        n = p[0]
        return 2 * n // 3 + (2 if n % 3 == 1 or n in (3, 5) else 1)
    if f == "cycle":
        n = p[0]
        return 2 * n // 3 + (1 if n % 3 == 0 and n != 3 else 2)
    if f == "wheel":
        n = p[0]
        return 2 * n // 3 + (3 if n % 3 == 0 and n != 3 else 4)
    if f == "complete" and p[0] >= 2:
        n = p[0]
        return n + _ceil_half(n) - (1 if n <= 3 else 0)
    if f == "complete_multipartite" and len(p) >= 2:
        n = sum(p)
        if len(p) == 2:
            return 4 if p == (1, 2) else n
        if n == 3:
            return 4  # K_{1,1,1} is K_3
        if all(x == 2 for x in p[:-1]):
            return n + 1
        return n + _ceil_half(spec.singleton_parts)
    if f == "double_star":
        return p[0] + 3
    if f == "kn_minus_matching":
        return p[0]
    raise UnsupportedFamily(f"no closed form for chi_d^t(C(G)) with G = {spec}")


def formula_complement_central(g: Graph) -> int:
    """Value for the complement of C(g): n for a tree, m otherwise."""
    s = classify(g)
    if g.n < 4 or not s.is_connected:
        raise ParameterError("needs a connected graph with n >= 4")
    return g.n if s.is_tree else g.m

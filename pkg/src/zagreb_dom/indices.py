"""Exact Zagreb-type indices of trees.

All values are Python ints, so nothing is ever rounded. For the single-vertex
tree the products are empty (value 1) and the sums are 0.
"""

from __future__ import annotations

from math import prod

from .tree import Tree


def m1(t: Tree) -> int:
    """Sum of squared degrees."""
    return sum(d * d for d in t.degrees)


def m2(t: Tree) -> int:
    """Sum over edges of the product of endpoint degrees."""
    deg = t.degrees
    return sum(deg[u] * deg[v] for u, v in t.edges())


def pi1(t: Tree) -> int:
    """Product of squared degrees."""
    if t.n == 1:
        return 1
    return prod(d * d for d in t.degrees)


def pi2(t: Tree) -> int:
    """Product over edges of the product of endpoint degrees."""
    deg = t.degrees
    return prod(deg[u] * deg[v] for u, v in t.edges())


def pi2_vertex_form(t: Tree) -> int:
    """Product of ``d(u) ** d(u)`` over vertices; equals :func:`pi2`."""
    if t.n == 1:
        return 1
    return prod(d**d for d in t.degrees)


def all_indices(t: Tree) -> dict[str, int]:
    return {"m1": m1(t), "m2": m2(t), "pi1": pi1(t), "pi2": pi2(t)}

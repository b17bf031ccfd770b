"""The three extremal tree families and their membership tests.

* ``T(n, gamma)``: the star K_{1,n-gamma} with a pendant edge hung on
  ``gamma - 1`` of its leaves.
* ``D(n, gamma)`` (``gamma <= n/3``): stars of orders floor(n/gamma) and
  ceil(n/gamma), chained by ``gamma - 1`` leaf-to-leaf edges.
* ``L(n, gamma)`` (``(n+3)/3 <= gamma <= n/2``): trees with degrees in
  {1, 2, 3}, prescribed degree counts, at most one pendant neighbour per
  vertex, and a minimum dominating set with one of two degree profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .domination import DominatingSet, gamma_only, iter_minimum_dominating_sets
from .enumeration import enumeration_cap, iter_level_sequences, levels_to_parents
from .errors import InfeasibleSpec, InstanceTooLarge
from .tree import (
    DegreeMultiset,
    Tree,
    canonical_code,
    canonical_relabel,
    degree_multiset,
    from_edge_list,
)

FAMILIES = ("T", "D", "L")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    gamma: int

    def validate(self) -> None:
        n, g = self.n, self.gamma
        if self.family == "T":
            ok = n >= 2 and 1 <= g <= n // 2
            rule = "1 <= gamma <= n/2"
        elif self.family == "D":
            ok = n >= 3 and 1 <= g and 3 * g <= n
            rule = "1 <= gamma <= n/3"
        elif self.family == "L":
            ok = 3 * g >= n + 3 and 2 * g <= n
            rule = "(n+3)/3 <= gamma <= n/2"
        else:
            raise InfeasibleSpec(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not ok:
            raise InfeasibleSpec(f"{self.family}(n={n}, gamma={g}) requires {rule}")


def _merged(pairs: list[tuple[int, int]]) -> DegreeMultiset:
    counts = DegreeMultiset()
    for degree, count in pairs:
        if count:
            counts[degree] += count
    return counts


def d_class_counts(n: int, gamma: int) -> DegreeMultiset:
    """Degree multiset shared by every member of D(n, gamma)."""
    FamilySpec("D", n, gamma).validate()
    q = (n - gamma) // gamma
    return _merged(
        [
            (1, n - 3 * gamma + 2),
            (2, 2 * gamma - 2),
            (q, 2 * gamma - n + gamma * q),
            (q + 1, n - gamma - gamma * q),
        ]
    )


def l_class_counts(n: int, gamma: int) -> DegreeMultiset:
    """Degree multiset shared by every member of L(n, gamma)."""
    FamilySpec("L", n, gamma).validate()
    return _merged([(3, 3 * gamma - n - 2), (2, 3 * n - 6 * gamma + 2), (1, 3 * gamma - n)])


def build_T(n: int, gamma: int) -> Tree:
    """Center 0, leaves ``1..n-gamma``; leaves ``1..gamma-1`` get a pendant vertex."""
    FamilySpec("T", n, gamma).validate()
    edges = [(0, i) for i in range(1, n - gamma + 1)]
    edges += [(i, n - gamma + i) for i in range(1, gamma)]
    return from_edge_list(n, edges)


def _join_stars(orders: list[int], super_edges: list[tuple[int, int]]) -> Tree | None:
    centers = []
    free_leaves: list[list[int]] = []
    edges = []
    nxt = 0
    for order in orders:
        c = nxt
        centers.append(c)
        leaves = list(range(c + 1, c + order))
        edges += [(c, x) for x in leaves]
        free_leaves.append(leaves)
        nxt += order
    for a, b in super_edges:
        if not free_leaves[a] or not free_leaves[b]:
            return None
        edges.append((free_leaves[a].pop(0), free_leaves[b].pop(0)))
    return from_edge_list(nxt, edges)


@lru_cache(maxsize=None)
def _d_members(n: int, gamma: int) -> tuple[tuple[str, Tree], ...]:
    FamilySpec("D", n, gamma).validate()
    small, r = divmod(n, gamma)
    found: dict[str, Tree] = {}
    for levels in iter_level_sequences(gamma):
        parents = levels_to_parents(levels)
        super_edges = [(i, p) for i, p in enumerate(parents, start=1)]
        super_deg = [0] * gamma
        for a, b in super_edges:
            super_deg[a] += 1
            super_deg[b] += 1
        for big in combinations(range(gamma), r):
            orders = [small + (s in big) for s in range(gamma)]
            if any(super_deg[s] > orders[s] - 1 for s in range(gamma)):
                continue
            t = _join_stars(orders, super_edges)
            if t is None or gamma_only(t) != gamma:
                continue
            code = canonical_code(t)
            if code not in found:
                found[code] = canonical_relabel(t)
    return tuple(sorted(found.items()))


def build_D_members(n: int, gamma: int) -> list[Tree]:
    """All non-isomorphic members of D(n, gamma), sorted by canonical code."""
    return [t for _, t in _d_members(n, gamma)]


def d_member_codes(n: int, gamma: int) -> frozenset[str]:
    return frozenset(code for code, _ in _d_members(n, gamma))


def is_member_D(t: Tree, n: int, gamma: int) -> bool:
    codes = d_member_codes(n, gamma)
    return t.n == n and canonical_code(t) in codes


def _profile_counts(t: Tree, members: tuple[int, ...]) -> tuple[DegreeMultiset, DegreeMultiset]:
    inside = set(members)
    deg = t.degrees
    dset = _merged([(deg[v], 1) for v in inside])
    rest = _merged([(deg[v], 1) for v in range(t.n) if v not in inside])
    return dset, rest


def matches_profile_i(t: Tree, d: DominatingSet, gamma: int) -> bool:
    """D holds the degree-3 vertices plus ``n - 2g + 2`` of degree 2.

    Its complement holds ``2n - 4g`` vertices of degree 2 and all leaves.
    The degree-2 split is the one for which ``|D| = gamma``.
    """
    n = t.n
    inside, outside = _profile_counts(t, d.members)
    return inside == _merged([(3, 3 * gamma - n - 2), (2, n - 2 * gamma + 2)]) and outside == _merged(
        [(2, 2 * n - 4 * gamma), (1, 3 * gamma - n)]
    )


def matches_profile_ii(t: Tree, d: DominatingSet, gamma: int) -> bool:
    """D holds ``n - 2g`` degree-2 vertices and all leaves; every outside
    vertex has exactly one neighbour in D."""
    n = t.n
    inside, outside = _profile_counts(t, d.members)
    if inside != _merged([(2, n - 2 * gamma), (1, 3 * gamma - n)]):
        return False
    if outside != _merged([(2, 2 * n - 4 * gamma + 2), (3, 3 * gamma - n - 2)]):
        return False
    members = set(d.members)
    return all(
        sum(1 for u in t.adjacency[v] if u in members) == 1 for v in range(n) if v not in members
    )


def is_member_L(t: Tree, n: int, gamma: int) -> bool:
    FamilySpec("L", n, gamma).validate()
    if t.n != n or degree_multiset(t) != l_class_counts(n, gamma):
        return False
    if max(t.pendant_neighbor_counts()) > 1:
        return False
    if gamma_only(t) != gamma:
        return False
    return any(
        matches_profile_i(t, d, gamma) or matches_profile_ii(t, d, gamma)
        for d in iter_minimum_dominating_sets(t)
    )


def build_L_members(n: int, gamma: int) -> list[Tree]:
    """Members of L(n, gamma) by filtering all trees of order ``n``."""
    FamilySpec("L", n, gamma).validate()
    if n > enumeration_cap():
        raise InstanceTooLarge(f"L-family enumeration is capped at n={enumeration_cap()}")
    target = l_class_counts(n, gamma)
    found: dict[str, Tree] = {}
    for levels in iter_level_sequences(n):
        t = from_edge_list(n, [(i, p) for i, p in enumerate(levels_to_parents(levels), start=1)])
        if degree_multiset(t) != target:
            continue
        if is_member_L(t, n, gamma):
            found[canonical_code(t)] = t
    return [found[c] for c in sorted(found)]


def build_members(family: str, n: int, gamma: int) -> list[Tree]:
    if family == "T":
        return [build_T(n, gamma)]
    if family == "D":
        return build_D_members(n, gamma)
    if family == "L":
        return build_L_members(n, gamma)
    raise InfeasibleSpec(f"unknown family {family!r}; expected one of {FAMILIES}")

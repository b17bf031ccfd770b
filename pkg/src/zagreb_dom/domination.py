"""Domination number of trees, minimum dominating sets and edge statistics."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import inf
from typing import Iterable, Iterator, Sequence

from .errors import InstanceTooLarge, NotDominating, PreconditionViolated
from .tree import Tree

BRUTEFORCE_LIMIT = 25


@dataclass(frozen=True)
class DominatingSet:
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def complement(self, n: int) -> tuple[int, ...]:
        inside = set(self.members)
        return tuple(v for v in range(n) if v not in inside)


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: DominatingSet


@dataclass(frozen=True)
class EdgePartitionCounts:
    """Edges split by how many endpoints lie in the dominating set.

    ``k`` edges inside D, ``l`` crossing edges, ``p`` edges outside D.
    """

    k: int
    l: int  # noqa: E741
    p: int


def _postorder(t: Tree, root: int = 0) -> tuple[list[int], list[int]]:
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for u in order:
        for v in t.adjacency[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    order.reverse()
    return order, parent


def _constrained_minimum(
    t: Tree,
    forced: Sequence[bool | None] | None = None,
    plan: tuple[list[int], list[int]] | None = None,
) -> float:
    """Minimum dominating-set size subject to forced in/out vertices.

    Three states per vertex of the tree rooted at 0: ``ins`` (in the set),
    ``dom`` (out, dominated by a child), ``und`` (out, left for the parent).
    Returns ``inf`` when the constraints admit no dominating set.
    """
    order, parent = plan or _postorder(t)
    n = t.n
    ins = [0.0] * n
    dom = [0.0] * n
    und = [0.0] * n
    for v in order:
        s_all = 0.0
        s_cover = 0.0
        s_dom = 0.0
        gap = inf
        has_child = False
        for u in t.adjacency[v]:
            if parent[u] != v or u == v:
                continue
            has_child = True
            best = min(ins[u], dom[u])
            s_all += min(best, und[u])
            s_cover += best
            s_dom += dom[u]
            gap = min(gap, ins[u] - best)
        f = forced[v] if forced is not None else None
        ins[v] = inf if f is False else 1 + s_all
        if f is True:
            dom[v] = und[v] = inf
        else:
            dom[v] = s_cover + gap if has_child else inf
            und[v] = s_dom
    root = order[-1]
    return min(ins[root], dom[root])


def is_dominating(t: Tree, members: Iterable[int]) -> bool:
    inside = set(members)
    return all(v in inside or any(u in inside for u in t.adjacency[v]) for v in range(t.n))


def domination_number(t: Tree) -> DominationResult:
    """Exact domination number with the lexicographically smallest witness."""
    plan = _postorder(t)
    gamma = int(_constrained_minimum(t, None, plan))
    forced: list[bool | None] = [None] * t.n
    chosen = []
    for v in range(t.n):
        if len(chosen) == gamma:
            forced[v] = False
            continue
        forced[v] = True
        if _constrained_minimum(t, forced, plan) == gamma:
            chosen.append(v)
        else:
            forced[v] = False
    witness = DominatingSet(tuple(chosen))
    assert len(witness) == gamma and is_dominating(t, witness.members)
    return DominationResult(gamma, witness)


def gamma_only(t: Tree) -> int:
    """Domination number without witness extraction."""
    return int(_constrained_minimum(t))


def gamma_bruteforce(t: Tree) -> int:
    """Domination number by exhaustive subset search (oracle)."""
    if t.n > BRUTEFORCE_LIMIT:
        raise InstanceTooLarge(f"subset search is capped at n={BRUTEFORCE_LIMIT}, got {t.n}")
    full = (1 << t.n) - 1
    closed = [(1 << v) | sum(1 << u for u in t.adjacency[v]) for v in range(t.n)]
    lower = -(-t.n // (t.max_degree + 1))
    for size in range(max(1, lower), t.n + 1):
        for combo in combinations(range(t.n), size):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return size
    raise AssertionError("unreachable: the whole vertex set dominates")


def iter_minimum_dominating_sets(t: Tree) -> Iterator[DominatingSet]:
    """All minimum dominating sets in lexicographic order of sorted members.

    Branches on vertices in id order and prunes any partial assignment whose
    constrained optimum exceeds the domination number.
    """
    if t.n > BRUTEFORCE_LIMIT:
        raise InstanceTooLarge(f"enumeration is capped at n={BRUTEFORCE_LIMIT}, got {t.n}")
    plan = _postorder(t)
    gamma = _constrained_minimum(t, None, plan)
    forced: list[bool | None] = [None] * t.n

    def branch(v: int, taken: int) -> Iterator[DominatingSet]:
        if v == t.n:
            yield DominatingSet(tuple(u for u in range(t.n) if forced[u]))
            return
        for choice in (True, False):
            if choice and taken == gamma:
                continue
            forced[v] = choice
            if _constrained_minimum(t, forced, plan) == gamma:
                yield from branch(v + 1, taken + choice)
        forced[v] = None

    yield from branch(0, 0)


def all_minimum_dominating_sets(t: Tree) -> list[DominatingSet]:
    sets = list(iter_minimum_dominating_sets(t))
    for d in sets:
        assert is_dominating(t, d.members)
    return sets


def edge_partition(t: Tree, d: DominatingSet | Iterable[int]) -> EdgePartitionCounts:
    members = d.members if isinstance(d, DominatingSet) else tuple(sorted(d))
    if not is_dominating(t, members):
        raise NotDominating(f"{list(members)} does not dominate the tree")
    inside = set(members)
    k = l = p = 0  # noqa: E741
    for u, v in t.edges():
        hits = (u in inside) + (v in inside)
        if hits == 2:
            k += 1
        elif hits == 1:
            l += 1  # noqa: E741
        else:
            p += 1
    deg = t.degrees
    assert k + l + p == t.n - 1
    assert sum(deg[u] for u in inside) == l + 2 * k
    assert sum(deg[v] for v in range(t.n) if v not in inside) == l + 2 * p
    if len(inside) == gamma_only(t):
        assert abs(k - p) <= len(inside) - 1
    return EdgePartitionCounts(k, l, p)


def check_pendant_lemma(t: Tree, gamma: int | None = None) -> bool:
    """Leaf-count lower bound for trees with degrees in {1, 2, 3}.

    Requires ``(n + 3) / 3 <= gamma <= n / 2``. Returns whether
    ``n1 >= 3*gamma - n`` holds, strictly when some vertex has two pendant
    neighbours.
    """
    n = t.n
    if gamma is None:
        gamma = gamma_only(t)
    if any(d not in (1, 2, 3) for d in t.degrees):
        raise PreconditionViolated("all degrees must lie in {1, 2, 3}")
    if not (3 * gamma >= n + 3 and 2 * gamma <= n):
        raise PreconditionViolated(f"gamma={gamma} outside [(n+3)/3, n/2] for n={n}")
    n1 = len(t.leaves())
    if max(t.pendant_neighbor_counts()) >= 2:
        return n1 > 3 * gamma - n
    return n1 >= 3 * gamma - n

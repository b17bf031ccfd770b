from __future__ import annotations

import random
from itertools import permutations

import pytest

from zagreb_dom.enumeration import prufer_decode
from zagreb_dom.tree import Tree, from_edge_list

ACCEPTANCE_LINES: list[str] = []


def random_tree(n: int, rng: random.Random) -> Tree:
    if n <= 2:
        return prufer_decode([], n)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def relabel(t: Tree, perm: list[int]) -> Tree:
    return from_edge_list(t.n, [(perm[u], perm[v]) for u, v in t.edges()])


def brute_isomorphic(a: Tree, b: Tree) -> bool:
    """Try every vertex bijection."""
    if a.n != b.n:
        return False
    target = {frozenset(e) for e in b.edges()}
    edges = a.edges()
    return any(
        all(frozenset((perm[u], perm[v])) in target for u, v in edges)
        for perm in permutations(range(a.n))
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

"""Isomorph-free generation of free trees.

Trees are produced as canonical level sequences (preorder depths of a tree
rooted at its center) using the successor rules of Wright, Richmond,
Odlyzko and McKay: rooted-tree successors in reverse lexicographic order,
with a jump past runs of candidates whose rooting is not central. Work per
tree is constant amortized.

Two naive oracles live here too, for testing only: decoding Prüfer
sequences and deduplicating by canonical code, and growing every tree of
order ``n - 1`` by one leaf.
"""

from __future__ import annotations

import heapq
import os
from typing import Iterator, Sequence

from .domination import gamma_only
from .errors import CapExceeded, InfeasibleGamma
from .tree import Tree, canonical_code, from_edge_list, from_parent_array

DEFAULT_CAP = 18
CAP_ENV = "ZAGREB_DOM_CAP"

Levels = list[int]


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_CAP


def _check_n(n: int, cap: int | None) -> None:
    limit = enumeration_cap() if cap is None else cap
    if n < 1:
        raise ValueError(f"tree order must be positive, got {n}")
    if n > limit:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {limit} (set {CAP_ENV} to raise it)")


def _next_rooted(levels: Levels, p: int | None = None) -> Levels | None:
    """Next rooted tree in reverse lexicographic level-sequence order."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p <= 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = levels[:]
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _first_subtree_end(levels: Levels) -> int:
    """Index one past the root's first subtree."""
    for i in range(2, len(levels)):
        if levels[i] == 1:
            return i
    return len(levels)


def _is_central(levels: Levels) -> bool:
    m = _first_subtree_end(levels)
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    h_left, h_rest = max(left), max(rest)
    if h_rest != h_left:
        return h_rest > h_left
    # bicentral: keep the rooting whose first half is not larger
    return len(left) < len(rest) or (len(left) == len(rest) and left <= rest)


def _advance(levels: Levels | None) -> Levels | None:
    """Smallest-step move from ``levels`` to the next central rooting."""
    while levels is not None and not _is_central(levels):
        m = _first_subtree_end(levels)
        p = m - 1
        nxt = _next_rooted(levels, p)
        if nxt is not None and levels[p] > 2:
            h = max(nxt[1:_first_subtree_end(nxt)]) - 1
            nxt[len(nxt) - (h + 1):] = range(1, h + 2)
        levels = nxt
    return levels


def initial_levels(n: int) -> Levels:
    """Level sequence of the path rooted at its center: the first free tree."""
    return list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))


def iter_level_sequences(n: int, start: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of all free trees of order ``n``.

    ``start`` resumes from a saved state (a sequence previously yielded, or
    :attr:`TreeStream.state`); that sequence is yielded first.
    """
    if n <= 2:
        if start is None or list(start) == initial_levels(n):
            yield tuple(initial_levels(n))
        return
    levels: Levels | None = list(start) if start is not None else _advance(initial_levels(n))
    while levels is not None:
        yield tuple(levels)
        levels = _advance(_next_rooted(levels))


def levels_to_parents(levels: Sequence[int]) -> list[int]:
    """Parent ids of vertices ``1..n-1`` in preorder numbering."""
    stack: list[int] = [0]
    parents = []
    for i in range(1, len(levels)):
        del stack[levels[i]:]
        parents.append(stack[-1])
        stack.append(i)
    return parents


def levels_to_tree(levels: Sequence[int]) -> Tree:
    return from_parent_array(levels_to_parents(levels))


class TreeStream:
    """Iterator over the free trees of order ``n``, optionally filtered by gamma.

    The stream is resumable: :attr:`state` is the level sequence that will
    be produced next (``None`` once exhausted) and can be passed back as
    ``start``. :meth:`shard` splits the stream round-robin across workers.
    """

    def __init__(
        self,
        n: int,
        gamma: int | None = None,
        *,
        start: Sequence[int] | None = None,
        cap: int | None = None,
    ) -> None:
        _check_n(n, cap)
        if gamma is not None and not (1 <= gamma <= max(1, n // 2)):
            raise InfeasibleGamma(f"gamma={gamma} outside 1..floor(n/2) for n={n}")
        self.n = n
        self.gamma = gamma
        self._source = iter_level_sequences(n, start)
        self._pending: tuple[int, ...] | None = next(self._source, None)

    @property
    def state(self) -> tuple[int, ...] | None:
        return self._pending

    def _raw(self) -> Iterator[tuple[int, ...]]:
        while self._pending is not None:
            current = self._pending
            self._pending = next(self._source, None)
            yield current

    def levels(self) -> Iterator[tuple[int, ...]]:
        for seq in self._raw():
            if self.gamma is None or gamma_only(levels_to_tree(seq)) == self.gamma:
                yield seq

    def __iter__(self) -> Iterator[Tree]:
        for seq in self._raw():
            t = levels_to_tree(seq)
            if self.gamma is None or gamma_only(t) == self.gamma:
                yield t

    def shard(self, index: int, count: int) -> Iterator[tuple[int, Tree]]:
        """Trees at stream positions ``index, index + count, ...`` with positions.

        Positions count the unfiltered stream, so shards of one logical
        stream are disjoint and cover it.
        """
        for pos, seq in enumerate(self._raw()):
            if pos % count != index:
                continue
            t = levels_to_tree(seq)
            if self.gamma is None or gamma_only(t) == self.gamma:
                yield pos, t


def enumerate_trees(n: int, *, cap: int | None = None) -> TreeStream:
    return TreeStream(n, cap=cap)


def enumerate_trees_with_gamma(n: int, gamma: int, *, cap: int | None = None) -> TreeStream:
    return TreeStream(n, gamma, cap=cap)


def count_trees(n: int, *, cap: int | None = None) -> int:
    _check_n(n, cap)
    return sum(1 for _ in iter_level_sequences(n))


# -- oracles ---------------------------------------------------------------


def prufer_decode(seq: Sequence[int], n: int | None = None) -> Tree:
    """Labeled tree on ``0..n-1`` with Prüfer sequence ``seq``."""
    if n is None:
        n = len(seq) + 2
    if n == 1:
        return from_edge_list(1, [])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return from_edge_list(n, edges)


def _partitions(total: int, max_part: int, max_len: int) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield [first] + rest


def _multiset_words(counts: list[int]) -> Iterator[list[int]]:
    remaining = sum(counts)
    word: list[int] = []

    def rec(left: int) -> Iterator[list[int]]:
        if left == 0:
            yield list(word)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                word.append(sym)
                yield from rec(left - 1)
                word.pop()
                counts[sym] += 1

    yield from rec(remaining)


def prufer_oracle_codes(n: int) -> set[str]:
    """Canonical codes of all trees of order ``n`` via Prüfer decoding.

    Every isomorphism class has a labeling whose degrees do not increase
    with the label, so only Prüfer words whose symbol multiplicities are
    non-increasing in the symbol are decoded.
    """
    if n <= 2:
        return {canonical_code(prufer_decode([], n))}
    codes = set()
    for part in _partitions(n - 2, n - 2, n):
        for word in _multiset_words(list(part)):
            codes.add(canonical_code(prufer_decode(word, n)))
    return codes


def extension_oracle_codes(n: int) -> set[str]:
    """Canonical codes of all trees of order ``n`` by repeated leaf addition."""
    layer = {canonical_code(from_edge_list(1, [])): from_edge_list(1, [])}
    for size in range(2, n + 1):
        nxt: dict[str, Tree] = {}
        for t in layer.values():
            base = t.edges()
            for v in range(t.n):
                grown = from_edge_list(size, base + [(v, size - 1)])
                nxt.setdefault(canonical_code(grown), grown)
        layer = nxt
    return set(layer)

"""Tree representation, text formats, canonical codes and isomorphism."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeCountMismatch,
    IdOutOfRange,
    ParseError,
    SelfLoop,
    TreeError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """A labeled tree on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    only built through :func:`from_edge_list` (or helpers calling it), which
    enforces the tree invariants.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n > 1 else 0

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def pendant_neighbor_counts(self) -> list[int]:
        """Number of leaf neighbours of each vertex."""
        deg = self.degrees
        return [sum(1 for u in nb if deg[u] == 1) for nb in self.adjacency]


class DegreeMultiset(dict):
    """Mapping degree -> number of vertices; missing degrees count as zero."""

    def __missing__(self, key: int) -> int:
        return 0

    @property
    def n(self) -> int:
        return sum(self.values())

    @property
    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.items())


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` as a tree on ``0..n-1`` and build it."""
    if n < 1:
        raise TreeError(f"a tree needs at least one vertex, got n={n}")
    edges = [tuple(e) for e in edges]
    if len(edges) != n - 1:
        raise EdgeCountMismatch(f"expected {n - 1} edges for n={n}, got {len(edges)}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        if len(e) != 2:
            raise TreeError(f"edge {e!r} does not have two endpoints")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if not seen[v]:
                seen[v] = True
                reached += 1
                stack.append(v)
    if reached != n:
        raise Disconnected(f"only {reached} of {n} vertices reachable from vertex 0")
    return Tree(n, tuple(tuple(sorted(s)) for s in nbrs))


def from_parent_array(parents: Sequence[int]) -> Tree:
    """Tree with edges ``(i, parents[i-1])`` for ``i = 1..len(parents)``."""
    n = len(parents) + 1
    return from_edge_list(n, [(i, p) for i, p in enumerate(parents, start=1)])


def parent_array(t: Tree, root: int = 0) -> list[int]:
    """Parent of each vertex ``1..n-1`` when ``t`` is rooted at ``root``.

    With ``root == 0`` this is the inverse of :func:`from_parent_array`.
    """
    parent = [-1] * t.n
    parent[root] = root
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in t.adjacency[u]:
            if parent[v] == -1:
                parent[v] = u
                queue.append(v)
    return parent[1:] if root == 0 else [parent[v] for v in range(t.n) if v != root]


def to_parent_string(t: Tree) -> str:
    """Compact ``"n:p1,p2,...,p{n-1}"`` form, rooted at vertex 0."""
    return f"{t.n}:" + ",".join(map(str, parent_array(t)))


def parse_parent_string(text: str) -> Tree:
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise ParseError(f"missing ':' in parent string {text!r}")
    try:
        n = int(head)
        parents = [int(x) for x in body.split(",")] if body else []
    except ValueError as exc:
        raise ParseError(f"non-integer token in parent string {text!r}") from exc
    if len(parents) != n - 1:
        raise ParseError(f"parent string declares n={n} but lists {len(parents)} parents")
    try:
        return from_parent_array(parents)
    except TreeError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list text format.

    Line 1 holds ``n``; each further non-comment line holds ``u v``. Ids are
    0-based; if they are not, but exactly ``n`` distinct labels occur, they
    are remapped to ``0..n-1`` in sorted order.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from exc
    if not rows:
        raise ParseError("empty input: expected vertex count on the first line")
    lineno, first = rows[0]
    if len(first) != 1:
        raise ParseError(f"line {lineno}: expected a single vertex count, got {first}")
    n = first[0]
    edges: list[Edge] = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {toks}")
        edges.append((toks[0], toks[1]))
    labels = sorted({x for e in edges for x in e})
    if labels and (labels[0] < 0 or labels[-1] >= n) and len(labels) == n:
        index = {lab: i for i, lab in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in edges]
    try:
        return from_edge_list(n, edges)
    except TreeError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc


def read_edge_list(path: str | Path) -> Tree:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(t: Tree) -> str:
    lines = [str(t.n)] + [f"{u} {v}" for u, v in t.edges()]
    return "\n".join(lines) + "\n"


def degree_multiset(t: Tree) -> DegreeMultiset:
    counts = DegreeMultiset()
    for d in t.degrees:
        counts[d] += 1
    return counts


def tree_centers(t: Tree) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    if t.n <= 2:
        return list(range(t.n))
    deg = t.degrees
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in t.adjacency[u]:
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def _rooted_codes(t: Tree, root: int) -> tuple[list[str], list[int], list[int]]:
    """AHU codes of every subtree when rooted at ``root``.

    Returns ``(code, parent, order)`` where ``order`` is a BFS order.
    """
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for u in order:
        for v in t.adjacency[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    children: list[list[str]] = [[] for _ in range(t.n)]
    code = [""] * t.n
    for u in reversed(order):
        kids = children[u]
        kids.sort()
        code[u] = "(" + "".join(kids) + ")"
        if u != root:
            children[parent[u]].append(code[u])
    return code, parent, order


def canonical_code(t: Tree) -> str:
    """Relabeling-invariant code; equal codes iff isomorphic trees.

    The tree is rooted at its center (the smaller code wins for bicentral
    trees) and encoded as nested parentheses with sorted child codes.
    """
    return min(_rooted_codes(t, c)[0][c] for c in tree_centers(t))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    if a.n != b.n or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_code(a) == canonical_code(b)


def canonical_relabel(t: Tree) -> Tree:
    """Isomorphic copy of ``t`` numbered in canonical preorder.

    Isomorphic inputs give identical outputs, and every vertex ``i >= 1``
    has a parent with a smaller id.
    """
    best: tuple[str, int] | None = None
    for c in tree_centers(t):
        code = _rooted_codes(t, c)[0][c]
        if best is None or code < best[0]:
            best = (code, c)
    assert best is not None
    root = best[1]
    code, parent, _ = _rooted_codes(t, root)
    new_id = {}
    edges = []
    stack = [root]
    while stack:
        u = stack.pop()
        new_id[u] = len(new_id)
        if u != root:
            edges.append((new_id[u], new_id[parent[u]]))
        kids = sorted((v for v in t.adjacency[u] if parent[v] == u), key=lambda v: code[v])
        stack.extend(reversed(kids))
    return from_edge_list(t.n, edges)


def path_tree(n: int) -> Tree:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    """K_{1,n-1} with center 0."""
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def spider_tree(legs: Sequence[int]) -> Tree:
    """One branch vertex (id 0) with paths of the given lengths attached."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edge_list(nxt, edges)


def tree_from_code(code: str) -> Tree:
    """Inverse of :func:`canonical_code` up to isomorphism."""
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
            count += 1
        elif ch == ")":
            if not stack:
                raise ParseError(f"unbalanced canonical code {code!r}")
            stack.pop()
        else:
            raise ParseError(f"unexpected character {ch!r} in canonical code")
    if stack or count == 0:
        raise ParseError(f"unbalanced canonical code {code!r}")
    return from_edge_list(count, edges)

"""Maximum matching via blossom contraction, plus factor-criticality.

The search grows an alternating BFS tree from each exposed vertex. Odd
cycles found along the way are contracted by redirecting every cycle
vertex to a common base, so augmenting paths through blossoms are found
without ever materialising the contracted graph. A greedy matching seeds
the search to keep the number of augmentation phases small.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, delete_vertex


@dataclass(frozen=True)
class Matching:
    """A validated matching: vertex-disjoint edges of the host graph."""

    host: Graph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.pairs:
            if not (0 <= u < v < self.host.n):
                raise ValueError(f"bad matching pair ({u}, {v})")
            if not self.host.has_edge(u, v):
                raise ValueError(f"pair ({u}, {v}) is not an edge of the host")
            if u in seen or v in seen:
                raise ValueError(f"pair ({u}, {v}) reuses a matched vertex")
            seen.add(u)
            seen.add(v)

    @property
    def size(self) -> int:
        return len(self.pairs)


def _mate_array(g: Graph) -> list[int]:
    n = g.n
    adj = g.adj
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break

    base = [0] * n
    p = [-1] * n

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_augmenting_path(root: int) -> bool:
        used = [False] * n
        for i in range(n):
            p[i] = -1
            base[i] = i
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle: contract the blossom to its base
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # found an exposed vertex: augment along the path
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)
    return match


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of g, packaged with its validation."""
    match = _mate_array(g)
    pairs = tuple(
        sorted((v, match[v]) for v in range(g.n) if match[v] > v)
    )
    return Matching(g, pairs)


def matching_number(g: Graph) -> int:
    match = _mate_array(g)
    return sum(1 for v in range(g.n) if match[v] != -1) // 2


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and matching_number(g) * 2 == g.n


def is_factor_critical(g: Graph) -> bool:
    """True when deleting any single vertex leaves a perfectly matchable graph.

    The one-vertex graph is factor-critical; no even-order graph is.
    """
    if g.n == 0 or g.n % 2 == 0:
        return False
    if g.n == 1:
        return True
    return all(has_perfect_matching(delete_vertex(g, v)) for v in range(g.n))

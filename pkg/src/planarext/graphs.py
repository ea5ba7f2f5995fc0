"""Immutable simple-graph type and basic structural operations.

Vertices are always 0..n-1. Adjacency is stored as sorted tuples, so two
Graph values compare equal exactly when they are the same labeled graph.
All operations return new graphs; nothing here mutates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Invariants (checked on construction): adjacency lists are strictly
    ascending tuples, contain no self-loops, and are symmetric.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, row in enumerate(self.adj):
            prev = -1
            for w in row:
                if w <= prev:
                    raise ValueError(f"adjacency of {v} is not strictly ascending")
                prev = w
                if w == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= w < self.n:
                    raise ValueError(f"label {w} out of range in adjacency of {v}")
        for v, row in enumerate(self.adj):
            for w in row:
                # symmetry: sorted rows allow binary-search-free membership via sets,
                # but rows are tiny, so a linear check is fine
                if v not in self.adj[w]:
                    raise ValueError(f"edge ({v},{w}) is not symmetric")

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as bitmasks; masks[v] bit w set iff v~w."""
        out = []
        for row in self.adj:
            m = 0
            for w in row:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, w) for v in range(self.n) for w in self.adj[v] if v < w)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeSequence:
    """A graphical-candidate degree sequence, stored non-increasing.

    The even-sum requirement is structural (every graph has even degree
    sum), so it is enforced here rather than at each use site.
    """

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]) -> None:
        object.__setattr__(self, "entries", tuple(sorted(entries, reverse=True)))
        if any(e < 0 for e in self.entries):
            raise ValueError("degrees must be non-negative")
        if sum(self.entries) % 2 != 0:
            raise ValueError("degree sum must be even")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse silently."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has a label out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n, tuple(tuple(sorted(r)) for r in rows))


def from_masks(n: int, masks: Sequence[int]) -> Graph:
    """Internal-ish fast path from adjacency bitmasks (assumed symmetric)."""
    adj = []
    for v in range(n):
        m = masks[v]
        row = []
        while m:
            b = m & -m
            row.append(b.bit_length() - 1)
            m ^= b
        adj.append(tuple(row))
    return Graph(n, tuple(adj))


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union, relabeling each argument's vertices by a running offset."""
    total = sum(g.n for g in graphs)
    adj: list[tuple[int, ...]] = []
    offset = 0
    for g in graphs:
        for row in g.adj:
            adj.append(tuple(w + offset for w in row))
        offset += g.n
    return Graph(total, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    masks = [full & ~(g.masks[v] | (1 << v)) for v in range(g.n)]
    return from_masks(g.n, masks)


def degree_stats(g: Graph) -> tuple[int, DegreeSequence]:
    """(maximum degree, degree sequence); the empty graph has max degree 0."""
    maxdeg = max(g.degrees, default=0)
    return maxdeg, DegreeSequence(g.degrees)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph on the given vertices, relabeled 0..k-1 in list order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertex in selection")
    adj = []
    for v in vertices:
        adj.append(tuple(sorted(index[w] for w in g.adj[v] if w in index)))
    return Graph(len(vertices), tuple(adj))


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as (induced graph, original labels) pairs.

    Labels are ascending inside each component and components are ordered
    by their smallest original vertex, so the output is deterministic.
    """
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comp.sort()
        out.append((induced_subgraph(g, comp), tuple(comp)))
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(connected_components(g)) == 1


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex v and relabel the rest contiguously, preserving order."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    keep = [u for u in range(g.n) if u != v]
    return induced_subgraph(g, keep)

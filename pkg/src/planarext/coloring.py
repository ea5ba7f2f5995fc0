"""Proper edge colorings: constructive Δ+1 coloring and an exact solver.

vizing_color implements the fan-rotation method: extend a maximal fan
from one endpoint of the uncolored edge, invert an alternating two-color
path to free a shared color, then rotate a fan prefix. It always lands
within Δ+1 colors. chromatic_index_exact settles Δ vs Δ+1 for small
instances by branch and bound, and partition_bound_check applies the
edge-count certificate: more than Δ·ν edges cannot be partitioned into
Δ matchings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph, degree_stats
from .matching import matching_number


class InstanceTooLargeError(ValueError):
    """Raised when the exact solver's search budget would be exceeded."""


@dataclass(frozen=True)
class EdgeColoring:
    """A validated proper edge coloring of every edge of the host."""

    host: Graph
    color_of: dict[tuple[int, int], int]
    palette_size: int

    def __post_init__(self) -> None:
        edges = self.host.edges()
        if set(self.color_of) != set(edges):
            raise ValueError("coloring must cover exactly the host's edges")
        for (u, v), c in self.color_of.items():
            if not 0 <= c < self.palette_size:
                raise ValueError(f"color {c} for edge ({u}, {v}) outside palette")
        at: dict[int, set[int]] = {}
        for (u, v), c in self.color_of.items():
            for x in (u, v):
                if c in at.setdefault(x, set()):
                    raise ValueError(f"color {c} repeated at vertex {x}")
                at[x].add(c)


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most Δ+1 colors (exactly Δ colors often)."""
    delta = degree_stats(g)[0]
    color: dict[tuple[int, int], int] = {}
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]  # vertex -> color -> mate

    def free(v: int) -> int:
        c = 0
        while c in at[v]:
            c += 1
        return c

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def assign(a: int, b: int, c: int) -> None:
        old = color.get(key(a, b))
        if old is not None:
            del at[a][old]
            del at[b][old]
        color[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    for u, v in g.edges():
        # maximal fan of u starting at v
        fan = [v]
        fan_set = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for w in g.adj[u]:
                if w in fan_set:
                    continue
                cw = color.get(key(u, w))
                if cw is not None and cw not in at[last]:
                    fan.append(w)
                    fan_set.add(w)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        if d not in at[u]:
            # no inversion needed; d is free at both ends of the fan
            path: list[tuple[int, int, int]] = []
        else:
            # walk the alternating c/d path from u, then flip it
            path = []
            x, col = u, d
            while col in at[x]:
                w = at[x][col]
                path.append((x, w, col))
                x, col = w, (c if col == d else d)
            for a, b, old in path:
                del at[a][old]
                del at[b][old]
                del color[key(a, b)]
            for a, b, old in path:
                assign(a, b, c if old == d else d)
        assert d not in at[u]
        # first fan prefix that is still a fan and ends where d is free
        j = None
        for i, w in enumerate(fan):
            if i > 0:
                cw = color.get(key(u, fan[i]))
                if cw is None or cw in at[fan[i - 1]]:
                    break  # prefix beyond here is no longer a fan
            if d not in at[w]:
                j = i
                break
        assert j is not None, "fan rotation target must exist"
        shift = [color[key(u, fan[i + 1])] for i in range(j)]
        for i in range(j):
            # uncolor before reassigning; shifting in place would clobber at[u]
            del color[key(u, fan[i + 1])]
            del at[u][shift[i]]
            del at[fan[i + 1]][shift[i]]
        for i in range(j):
            assign(u, fan[i], shift[i])
        assign(u, fan[j], d)

    palette = max(color.values(), default=-1) + 1
    assert palette <= delta + 1
    return EdgeColoring(g, color, palette)


def chromatic_index_exact(g: Graph) -> int:
    """Exact chromatic index (Δ or Δ+1) by branch and bound; |E| <= 40 only."""
    if g.m == 0:
        return 0
    if g.m > 40:
        raise InstanceTooLargeError(f"exact solver limited to 40 edges, got {g.m}")
    delta = degree_stats(g)[0]
    edges = sorted(g.edges(), key=lambda e: -(g.degree(e[0]) + g.degree(e[1])))
    conflicts: list[list[int]] = []
    for i, (u, v) in enumerate(edges):
        conflicts.append(
            [j for j in range(i) if edges[j][0] in (u, v) or edges[j][1] in (u, v)]
        )

    def colorable(k: int) -> bool:
        assigned = [-1] * len(edges)

        def place(i: int, used_max: int) -> bool:
            if i == len(edges):
                return True
            banned = {assigned[j] for j in conflicts[i]}
            # allowing at most one fresh color kills color-permutation symmetry
            for c in range(min(used_max + 2, k)):
                if c not in banned:
                    assigned[i] = c
                    if place(i + 1, max(used_max, c)):
                        return True
                    assigned[i] = -1
            return False

        assigned[0] = 0
        return place(1, 0)

    if colorable(delta):
        return delta
    assert vizing_color(g).palette_size <= delta + 1
    return delta + 1


class PartitionBound(NamedTuple):
    threshold: int
    exceeds: bool


def partition_bound_check(g: Graph) -> PartitionBound:
    """(threshold, exceeds): exceeding Δ·ν edges certifies chromatic index Δ+1.

    A proper Δ-coloring would partition the edges into Δ matchings of
    size at most ν each, so |E| > Δ·ν rules it out.
    """
    threshold = degree_stats(g)[0] * matching_number(g)
    return PartitionBound(threshold, g.m > threshold)

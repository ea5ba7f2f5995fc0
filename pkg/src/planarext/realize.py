"""Exhaustive search for a planar graph with a prescribed degree sequence.

The search places vertices in non-increasing target order and repeatedly
saturates the vertex with the largest remaining demand, branching over
its possible neighbor sets. Three prunes keep the tree small, all of
them sound (they never discard a completable branch):

- residual feasibility: the remaining demands must satisfy the
  Erdos-Gallai inequalities even ignoring already-placed edges, a
  relaxation of the true constrained problem;
- partial planarity: placed edges are never removed, so a non-planar
  partial graph cannot complete to a planar one;
- interchangeability: candidates with equal remaining demand and equal
  current neighborhoods are mutually swappable by an automorphism of the
  partial graph, so only prefix selections within such a group are tried.

Exhaustion is therefore a proof that no planar realization exists;
"timed-out" means the time budget lapsed with branches unexplored.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import DegreeSequence, Graph, from_masks
from .planarity import _decide, is_planar


@dataclass(frozen=True)
class RealizeResult:
    status: str  # "found" | "exhausted" | "timed-out"
    graph: Graph | None


class _Deadline(Exception):
    pass


def _residual_feasible(rem: list[int]) -> bool:
    degs = sorted(rem, reverse=True)
    if not degs or degs[0] == 0:
        return True
    n = len(degs)
    if degs[0] > n - 1:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += degs[k - 1]
        tail = sum(min(x, k) for x in degs[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def _group_selections(groups: list[list[int]], need: int) -> list[list[int]]:
    """All ways to take `need` vertices as per-group prefixes."""
    out: list[list[int]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if left == 0:
            out.append(list(acc))
            return
        if i == len(groups):
            return
        if sum(len(grp) for grp in groups[i:]) < left:
            return
        take_max = min(left, len(groups[i]))
        for take in range(take_max + 1):
            rec(i + 1, left - take, acc + groups[i][:take])

    rec(0, need, [])
    return out


def _adj_lists(n: int, masks: list[int]) -> list[list[int]]:
    adj: list[list[int]] = []
    for v in range(n):
        m = masks[v]
        row = []
        while m:
            b = m & -m
            row.append(b.bit_length() - 1)
            m ^= b
        adj.append(row)
    return adj


def realize_degree_sequence_planar(
    seq: DegreeSequence, budget: float | None = 30.0
) -> RealizeResult:
    """Find a planar graph with the given degree sequence, or prove none exists.

    `budget` is a wall-clock allowance in seconds (None for unlimited).
    Returns a RealizeResult whose status is "found" (graph attached),
    "exhausted" (no planar realization exists), or "timed-out".
    """
    if not isinstance(seq, DegreeSequence):
        seq = DegreeSequence(seq)
    target = list(seq.entries)
    n = len(target)
    deadline = None if budget is None else time.monotonic() + budget
    rem = list(target)
    masks = [0] * n
    if n == 0:
        return RealizeResult("found", Graph(0, ()))
    if not _residual_feasible(rem):
        return RealizeResult("exhausted", None)

    def search() -> Graph | None:
        if deadline is not None and time.monotonic() > deadline:
            raise _Deadline
        pivot = max(range(n), key=lambda v: rem[v])
        need = rem[pivot]
        if need == 0:
            g = from_masks(n, masks)
            assert is_planar(g).verdict
            return g
        cands = [
            u
            for u in range(n)
            if u != pivot and rem[u] > 0 and not masks[pivot] >> u & 1
        ]
        if len(cands) < need:
            return None
        grouped: dict[tuple[int, int], list[int]] = {}
        for u in cands:
            grouped.setdefault((rem[u], masks[u]), []).append(u)
        groups = [sorted(members) for _, members in sorted(grouped.items())]
        for chosen in _group_selections(groups, need):
            for u in chosen:
                masks[pivot] |= 1 << u
                masks[u] |= 1 << pivot
                rem[u] -= 1
            rem[pivot] = 0
            if _residual_feasible(rem) and _decide(n, _adj_lists(n, masks)):
                result = search()
                if result is not None:
                    return result
            rem[pivot] = need
            for u in chosen:
                masks[pivot] &= ~(1 << u)
                masks[u] &= ~(1 << pivot)
                rem[u] += 1
        return None

    try:
        found = search()
    except _Deadline:
        return RealizeResult("timed-out", None)
    if found is None:
        return RealizeResult("exhausted", None)
    return RealizeResult("found", found)

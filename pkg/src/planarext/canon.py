"""Canonical forms for small graphs by refinement plus individualization.

canonical_form returns a byte string that is equal for two graphs exactly
when they are isomorphic (respecting vertex colors when given). The search
is the classic one: iterate an equitable color refinement, individualize
one vertex of the first non-singleton cell, recurse, and keep the minimum
leaf encoding. Interchangeable vertices (swapping them is visibly an
automorphism) are branched only once, which keeps complete graphs and
other locally symmetric cases from exploding.

Intended scale is the desk scale of this package (up to ~16 vertices);
no attempt is made to compete with real canonical-labeling tools.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph


def _neighbor_lists(n: int, masks: Sequence[int]) -> list[list[int]]:
    out = []
    for v in range(n):
        m = masks[v]
        row = []
        while m:
            b = m & -m
            row.append(b.bit_length() - 1)
            m ^= b
        out.append(row)
    return out


def _refine(n: int, neighbors: list[list[int]], colors: list[int]) -> list[int]:
    """Equitable refinement; returns a normalized stable coloring."""
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in neighbors[v])))
            for v in range(n)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[s] for s in sigs]
        if len(remap) == ncolors:
            return new
        colors, ncolors = new, len(remap)


def _pack_bits(n: int, masks: Sequence[int], order: list[int]) -> bytes:
    """Upper-triangle bits of the relabeled adjacency matrix, MSB-first."""
    bits = 0
    count = 0
    for j in range(n):
        oj = order[j]
        row = masks[oj]
        for k in range(j + 1, n):
            bits = (bits << 1) | ((row >> order[k]) & 1)
            count += 1
    pad = (-count) % 8
    bits <<= pad
    return bits.to_bytes((count + pad) // 8, "big")


def _swap_equivalent(masks: Sequence[int], u: int, v: int) -> bool:
    # transposing u and v is an automorphism iff their rows agree off {u, v}
    return (masks[u] & ~(1 << v)) == (masks[v] & ~(1 << u))


def canonical_form_masks(
    n: int, masks: Sequence[int], colors: Sequence[int] | None = None
) -> bytes:
    if n == 0:
        return bytes([0])
    if n > 255:
        raise ValueError("canonical_form supports at most 255 vertices")
    base = list(colors) if colors is not None else None
    if base is not None and (len(base) != n or any(not 0 <= c < 256 for c in base)):
        raise ValueError("colors must be one small non-negative int per vertex")

    neighbors = _neighbor_lists(n, masks)
    start = list(base) if base is not None else [0] * n
    best: bytes | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, neighbors, colors)
        # locate the smallest-numbered non-singleton cell
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = -1
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target == -1:
            order = sorted(range(n), key=colors.__getitem__)
            cand = _pack_bits(n, masks, order)
            if base is not None:
                cand = bytes(base[v] for v in order) + cand
            if best is None or cand < best:
                best = cand
            return
        cell = [v for v in range(n) if colors[v] == target]
        tried: list[int] = []
        for v in cell:
            if any(_swap_equivalent(masks, v, u) for u in tried):
                continue
            tried.append(v)
            child = [c * 2 + 1 for c in colors]
            child[v] = colors[v] * 2
            search(child)

    search(start)
    assert best is not None
    return bytes([n]) + best


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Canonical byte string; equal iff isomorphic (color-respecting)."""
    return canonical_form_masks(g.n, g.masks, colors)

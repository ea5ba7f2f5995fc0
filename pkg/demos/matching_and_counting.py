"""Matchings, canonical forms, exhaustive counting, and graph6.

The verification stack rests on four primitives: maximum matching in
general graphs (blossom algorithm), canonical labeling (so isomorphic
graphs collide), isomorph-free exhaustive enumeration built on it, and
the graph6 text codec for shipping graphs around. This script shows each
one doing its job and reproduces some published census numbers.

Run: python3 demos/matching_and_counting.py
"""

from __future__ import annotations

import random

from planarext import (
    atlas,
    build_graph,
    canonical_form,
    complete,
    enumerate_connected,
    graph6_decode,
    graph6_encode,
    has_perfect_matching,
    matching_number,
    maximum_matching,
    star,
)

# ---------------------------------------------------------------------------
# The blossom algorithm returns an actual matching, not just a number,
# and the Matching object validates itself (disjointness, edges exist).

g = atlas("A5")
m = maximum_matching(g)
print(f"A5: matching number {m.size}, one maximum matching: {sorted(m.pairs)}")

# Petersen graph: 3-regular, 10 vertices, perfect matching exists.
petersen = build_graph(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
])
print(f"Petersen has perfect matching: {has_perfect_matching(petersen)}")

# Odd complete graphs max out at floor(n/2).
for n in (5, 7, 9):
    assert matching_number(complete(n)) == n // 2
print("matching_number(K_n) = floor(n/2) for n in {5, 7, 9}")

# ---------------------------------------------------------------------------
# Canonical forms: relabeling never changes them, non-isomorphic graphs
# (here: the claw and the triangle-plus-pendant) never share them.

path = build_graph(4, [(0, 1), (1, 2), (2, 3)])
rng = random.Random(11)
perm = list(range(4))
rng.shuffle(perm)
relabeled = build_graph(4, [(perm[0], perm[1]), (perm[1], perm[2]), (perm[2], perm[3])])
assert canonical_form(path) == canonical_form(relabeled)
claw = star(3)
paw = build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
assert canonical_form(claw) != canonical_form(paw)
print("\ncanonical forms: relabeling-invariant, isomorphism-separating")

# ---------------------------------------------------------------------------
# Isomorph-free enumeration of connected graphs, by canonical
# augmentation. Counts per order reproduce the published census of
# connected graphs (1, 1, 2, 6, 21, 112) and of connected planar graphs
# (..., 20, 99, 646).

counts: dict[int, int] = {}
for g in enumerate_connected(6, 5):
    counts[g.n] = counts.get(g.n, 0) + 1
print(f"\nconnected graphs by order (maxdeg <= 5): {counts}")
assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}

planar_counts: dict[int, int] = {}
for g in enumerate_connected(7, 6, planar_only=True):
    planar_counts[g.n] = planar_counts.get(g.n, 0) + 1
print(f"connected planar graphs by order: {planar_counts}")
assert planar_counts[6] == 99 and planar_counts[7] == 646

# ---------------------------------------------------------------------------
# graph6: the compact printable interchange format. Orders up to 62 use
# one header byte; bigger graphs switch to the long header
# automatically. Round trips are exact.

for g in (complete(3), star(5), atlas("A7"), petersen):
    code = graph6_encode(g)
    back = graph6_decode(code)
    assert back.adj == g.adj
    print(f"graph6({g.n:2d} vertices, {g.m:2d} edges) = {code}")

big = star(99)
code = graph6_encode(big)
assert graph6_decode(code).adj == big.adj
print(f"long form kicks in past 62 vertices: star(99) -> {len(code)} chars, "
      f"prefix {code[:6]!r}")

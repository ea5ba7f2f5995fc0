"""Independent verification of the edge bounds at desk scale.

The bounds and the families come from the same theory, so trusting one
because of the other would be circular. This script runs the third
voice: exhaustive isomorph-free enumeration of connected components up
to a vertex budget, a best-edges-per-matching-unit table, and an
unbounded-knapsack combiner that asks "what is the best multigraph of
components the enumerator actually saw?" The verdict compares that
oracle value against the closed formula.

Statuses:
  confirmed       oracle == formula and every component size that could
                  matter was either fully enumerated or provably beaten
  realizable-only oracle == formula but some relevant component size is
                  out of enumeration reach
  inconclusive    oracle < formula (the witness needs bigger components)
A falsification (oracle > formula) raises instead of returning.

Run: python3 demos/verification_walkthrough.py   (about half a minute)
"""

from __future__ import annotations

import time

from planarext import (
    combine,
    component_table,
    graph6_encode,
    max_edges_planar,
    verify_theorem,
)

# ---------------------------------------------------------------------------
# The component table for degree cap d = 5 on at most 7 vertices: for
# each matching number mu, the densest connected planar graph with all
# degrees <= 4 that the enumerator found, plus whether the enumeration
# was exhaustive for that mu (it is when 2*mu+1 <= n_max, because an
# extremal component is a star or factor-critical on 2*mu+1 vertices).

print("component table, d=5, n_max=7")
t0 = time.monotonic()
table = component_table(5, 7)
for rec in table:
    print(
        f"  mu={rec.mu}: best_edges={rec.best_edges} "
        f"exhaustive={rec.exhaustive} witness={graph6_encode(rec.witness)}"
    )
print(f"  built in {time.monotonic() - t0:.2f}s")

# The knapsack combiner: best total edges over disjoint unions whose
# matching numbers sum to at most nu-1.
for nu in range(2, 7):
    print(f"  combine(table, nu={nu}) = {combine(table, nu)}"
          f"  vs formula {max_edges_planar(5, nu)}")

# ---------------------------------------------------------------------------
# Full verdicts for the small degree caps: everything is within
# enumeration reach, so the oracle confirms the formula outright.

for d, n_max in ((3, 5), (4, 7), (5, 7)):
    verdicts = [verify_theorem(d, nu, n_max) for nu in range(2, 9)]
    assert all(v.status == "confirmed" for v in verdicts)
    print(f"d={d}, n_max={n_max}: confirmed for all nu in [2, 8]")

# ---------------------------------------------------------------------------
# d = 6 is the honest frontier. On 9 vertices the enumerator reaches the
# 9-vertex block that the extremal family uses (mu = 4), so small nu are
# confirmed; mid-range nu need 11- and 13-vertex components that exist
# but cannot be brute-forced here, so the oracle matches the formula
# without exhausting the space; and nu = 8 needs the 15-vertex block, so
# the oracle's best witness falls one edge short of the formula.

print("\nd=6 verdicts at n_max=9 (the table build dominates the runtime)")
t0 = time.monotonic()
for nu in (2, 5, 6, 8, 9):
    v = verify_theorem(6, nu, 9)
    print(
        f"  nu={nu:2d}: {v.status:15s} oracle={v.oracle_value:3d} "
        f"formula={v.formula_value:3d}"
    )
print(f"  elapsed {time.monotonic() - t0:.1f}s")

# ---------------------------------------------------------------------------
# For d >= 7 the extremal components are stars, which the enumerator
# sees immediately, so even a tiny vertex budget confirms the linear
# bound.

v = verify_theorem(7, 5, 3)
print(f"\nd=7, nu=5, n_max=3: {v.status} "
      f"(oracle {v.oracle_value} == formula {v.formula_value})")

# A falsification would raise FalsificationError instead of returning a
# Verdict, and the command line maps that to exit status 2. There is no
# honest way to demo one; the test suite fabricates a poisoned table to
# prove the alarm fires.
print("no falsification anywhere above (the exception never fired)")

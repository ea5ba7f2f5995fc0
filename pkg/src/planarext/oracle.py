"""Desk-scale verification of the planar bound, formula-free.

The oracle enumerates all connected planar graphs with Δ < d up to n_max
vertices, keeps the best edge count per matching number mu, and
recombines records by an unbounded knapsack over the matching budget
nu-1 (matching numbers add over disjoint unions). The knapsack value is
a realizable lower bound; the verdict is

- confirmed: the value meets the closed form AND every matching number
  that could contribute is either exhaustively enumerated (2 mu + 1 <=
  n_max) or provably dominated: a component with nu = mu that is not a
  (d-1)-star lives on exactly 2 mu + 1 vertices, so its edges are capped
  by min(3(2mu+1)-6, floor((d-1)(2mu+1)/2)), and when exhaustive records
  already recombine to at least that cap within the same budget, larger
  components cannot help;
- realizable-only: the value meets the closed form but some contributing
  matching number is neither enumerated nor dominated;
- inconclusive: the value falls short of the closed form.

A knapsack value exceeding the closed form would disprove it and raises
FalsificationError rather than returning a verdict.

Subtrees of the generation tree are independent, so roots at a fixed
order are sharded across workers and merged by per-mu maximum (ties to
the smaller canonical form), making output independent of scheduling. A
checkpoint file records completed roots (sorted hex canonical forms) with
partial results in a JSON sidecar next to it, enabling resume.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .bounds import max_edges_planar
from .canon import canonical_form
from .constructions import star
from .enumeration import _children, _levels
from .graphs import Graph, degree_stats, from_masks, is_connected
from .matching import matching_number
from .planarity import is_planar
from .serialize import graph6_decode, graph6_encode

_SHARD_ORDER = 6


@dataclass(frozen=True)
class ComponentRecord:
    """Best known connected component for one matching number."""

    mu: int
    best_edges: int
    witness: Graph
    exhaustive: bool


@dataclass(frozen=True)
class Verdict:
    status: str  # "confirmed" | "realizable-only" | "inconclusive"
    oracle_value: int
    formula_value: int


class FalsificationError(RuntimeError):
    """The oracle built a class member with more edges than the formula allows."""

    def __init__(self, d: int, nu: int, oracle_value: int, formula_value: int):
        super().__init__(
            f"oracle found {oracle_value} edges for (d={d}, nu={nu}) "
            f"but the formula gives {formula_value}"
        )
        self.d = d
        self.nu = nu
        self.oracle_value = oracle_value
        self.formula_value = formula_value


_Best = dict[int, tuple[int, bytes, Graph]]  # mu -> (edges, canon, witness)


def _offer(best: _Best, g: Graph, form: bytes | None = None) -> None:
    mu = matching_number(g)
    if mu < 1:
        return
    if form is None:
        form = canonical_form(g)
    cur = best.get(mu)
    if cur is None or g.m > cur[0] or (g.m == cur[0] and form < cur[1]):
        best[mu] = (g.m, form, g)


def _subtree_worker(args: tuple[tuple[int, ...], int, int]) -> dict[str, list]:
    """Best per-mu results over one generation subtree (root included)."""
    root, n_max, deg_max = args
    best: _Best = {}
    stack: list[tuple[int, ...]] = [root]
    while stack:
        masks = stack.pop()
        n = len(masks)
        _offer(best, from_masks(n, masks))
        if n < n_max:
            for child, _form in _children(n, masks, deg_max, True):
                stack.append(child)
    return {str(mu): [e, graph6_encode(g)] for mu, (e, _f, g) in best.items()}


def _merge_sidecar(best: _Best, payload: dict[str, list]) -> None:
    for mu_text, (edges, g6) in payload.items():
        g = graph6_decode(g6)
        _offer(best, g)
        assert best[int(mu_text)][0] >= edges


def _load_checkpoint(path: str, d: int, n_max: int) -> dict[str, dict[str, list]]:
    sidecar = path + ".results.json"
    if not os.path.exists(path) or not os.path.exists(sidecar):
        return {}
    with open(sidecar, "r", encoding="ascii") as fh:
        data = json.load(fh)
    if data.get("d") != d or data.get("n_max") != n_max:
        raise ValueError(
            f"checkpoint {path} was written for d={data.get('d')}, "
            f"n_max={data.get('n_max')}, not (d={d}, n_max={n_max})"
        )
    with open(path, "r", encoding="ascii") as fh:
        done_lines = {line.strip() for line in fh if line.strip()}
    roots = data.get("roots", {})
    return {hex_form: roots[hex_form] for hex_form in done_lines if hex_form in roots}


def _save_checkpoint(
    path: str, d: int, n_max: int, done: dict[str, dict[str, list]]
) -> None:
    payload = {"d": d, "n_max": n_max, "roots": done}
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        for hex_form in sorted(done):
            fh.write(hex_form + "\n")
    os.replace(tmp, path)
    tmp = path + ".results.json.tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
    os.replace(tmp, path + ".results.json")


_TABLE_CACHE: dict[tuple[int, int], list[ComponentRecord]] = {}


def component_table(
    d: int, n_max: int, *, workers: int = 1, checkpoint: str | None = None
) -> list[ComponentRecord]:
    """Best connected planar component with Δ < d per matching number.

    Records carry the exhaustive flag (2 mu + 1 <= n_max): whether every
    candidate component order for that matching number was enumerated.
    The (d-1)-star record is injected analytically when its d vertices
    exceed n_max, so star-built families stay verifiable at small n_max.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    key = (d, n_max)
    if key in _TABLE_CACHE:
        return _TABLE_CACHE[key]
    deg_max = d - 1
    best: _Best = {}
    shard_order = min(_SHARD_ORDER, n_max)
    roots: list[tuple[tuple[int, ...], bytes]] = []
    for order, level in enumerate(_levels(shard_order, deg_max, True), start=1):
        if n_max > shard_order and order == shard_order:
            roots = level
        else:
            for masks, form in level:
                _offer(best, from_masks(len(masks), masks), form)
    if roots:
        done = _load_checkpoint(checkpoint, d, n_max) if checkpoint else {}
        pending = [
            (masks, form.hex())
            for masks, form in roots
            if form.hex() not in done
        ]
        jobs = [(masks, n_max, deg_max) for masks, _ in pending]
        if workers > 1 and len(jobs) > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=workers) as pool:
                for (_masks, hex_form), result in zip(pending, pool.map(_subtree_worker, jobs)):
                    done[hex_form] = result
                    if checkpoint:
                        _save_checkpoint(checkpoint, d, n_max, done)
        else:
            for (_masks, hex_form), job in zip(pending, jobs):
                done[hex_form] = _subtree_worker(job)
                if checkpoint:
                    _save_checkpoint(checkpoint, d, n_max, done)
        for payload in done.values():
            _merge_sidecar(best, payload)
    if d > n_max:
        _offer(best, star(d - 1))
    records = []
    for mu in sorted(best):
        edges, _form, witness = best[mu]
        assert is_connected(witness)
        assert degree_stats(witness)[0] < d
        assert matching_number(witness) == mu
        assert witness.m == edges
        assert is_planar(witness).verdict
        records.append(
            ComponentRecord(
                mu=mu,
                best_edges=edges,
                witness=witness,
                exhaustive=2 * mu + 1 <= n_max,
            )
        )
    _TABLE_CACHE[key] = records
    return records


def combine(table: list[ComponentRecord], nu: int) -> int:
    """Best total edges over disjoint unions with matching number < nu.

    Unbounded knapsack: components may repeat, their matching numbers must
    sum to at most nu-1.
    """
    budget = nu - 1
    if budget <= 0:
        return 0
    f = [0] * (budget + 1)
    for b in range(1, budget + 1):
        value = f[b - 1]
        for rec in table:
            if rec.mu <= b:
                value = max(value, f[b - rec.mu] + rec.best_edges)
        f[b] = value
    return f[budget]


def _component_cap(d: int, mu: int) -> int:
    """Edge cap for a non-star component with matching number mu.

    Such a component in an edge-extremal graph is factor-critical, hence
    on exactly 2 mu + 1 vertices; planarity and the degree bound cap its
    edges. Stars (the only other shape) are folded in for mu = 1.
    """
    n = 2 * mu + 1
    cap = min(3 * n - 6, (d - 1) * n // 2)
    if mu == 1:
        cap = max(cap, d - 1)
    return cap


def verify_theorem(
    d: int, nu: int, n_max: int, *, workers: int = 1, checkpoint: str | None = None
) -> Verdict:
    """Compare the recombination oracle against the closed-form bound."""
    table = component_table(d, n_max, workers=workers, checkpoint=checkpoint)
    oracle_value = combine(table, nu)
    formula_value = max_edges_planar(d, nu)
    if oracle_value > formula_value:
        raise FalsificationError(d, nu, oracle_value, formula_value)
    if oracle_value < formula_value:
        return Verdict("inconclusive", oracle_value, formula_value)
    exhaustive_records = [rec for rec in table if rec.exhaustive]
    for mu in range(1, nu):
        if 2 * mu + 1 <= n_max:
            continue
        if _component_cap(d, mu) > combine(exhaustive_records, mu + 1):
            return Verdict("realizable-only", oracle_value, formula_value)
    return Verdict("confirmed", oracle_value, formula_value)

"""Constructors for the named graphs and extremal families.

The five atlas graphs (K5 minus an edge and A4..A7) are transcribed from
drawings, so their constructor cross-checks every published statistic
(order, size, maximum degree, matching number, planarity) on first use
and refuses to hand out a graph that fails any of them. The pivotal
families assemble disjoint unions that meet the planar bound exactly;
the general-case families meet the unrestricted bound but need not be
planar.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bounds import max_edges_general, max_edges_planar
from .graphs import Graph, build_graph, degree_stats, disjoint_union
from .matching import matching_number
from .planarity import is_planar


@dataclass(frozen=True)
class ClassParams:
    """Parameters (d, nu) of a class: graphs with Δ < d and ν < nu."""

    d: int
    nu: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.nu < 1:
            raise ValueError("class parameters must be at least 1")


class AtlasName(Enum):
    K5_MINUS = "K5_MINUS"
    A4 = "A4"
    A5 = "A5"
    A6 = "A6"
    A7 = "A7"


def star(k: int) -> Graph:
    """The star K_{1,k}: center 0 joined to k leaves."""
    if k < 0:
        raise ValueError("leaf count must be nonnegative")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k_prime(d: int) -> Graph:
    """K_d minus a perfect matching, plus an apex adjacent to d-1 vertices.

    Defined for even d only; the apex is vertex d and misses vertex d-1.
    """
    if d < 2 or d % 2 != 0:
        raise ValueError("k_prime requires an even degree parameter >= 2")
    edges = [
        (i, j)
        for i in range(d)
        for j in range(i + 1, d)
        if not (j == i + 1 and i % 2 == 0)
    ]
    edges.extend((i, d) for i in range(d - 1))
    return build_graph(d + 1, edges)


# adjacency transcribed from drawings, keyed by figure labels
_ATLAS_RAW: dict[AtlasName, dict[int, tuple[int, ...]]] = {
    AtlasName.A4: {
        1: (2, 3, 4, 5, 6),
        2: (3, 6, 9, 12),
        3: (4, 9),
        4: (5, 9, 10),
        5: (6, 10, 12),
        6: (12,),
        9: (10, 12),
        10: (12,),
    },
    AtlasName.A5: {
        1: (2, 3, 4, 5, 6),
        2: (3, 6, 7, 9),
        3: (4, 7, 8),
        4: (5, 8, 10),
        5: (6, 10, 11),
        6: (9, 11),
        7: (8, 9),
        8: (10,),
        9: (10, 11),
        10: (11,),
    },
    AtlasName.A6: {
        1: (2, 3, 4, 5, 6),
        2: (3, 6, 7, 8),
        3: (4, 8, 9),
        4: (5, 9, 10),
        5: (6, 10, 13),
        6: (7, 13),
        7: (8, 11),
        8: (11, 12),
        9: (10, 12),
        10: (12, 13),
        11: (12, 13),
        12: (13,),
    },
    AtlasName.A7: {
        1: (2, 3, 4, 5, 6),
        2: (3, 6, 7, 8),
        3: (4, 8, 9),
        4: (5, 9, 10),
        5: (6, 10, 12),
        6: (7, 12),
        7: (8, 13, 15),
        8: (13, 14),
        9: (10, 11, 14),
        10: (11, 12),
        11: (12, 14, 15),
        12: (15,),
        13: (14, 15),
        14: (15,),
    },
}

# published statistics: (n, edges, max degree, matching number)
_ATLAS_STATS: dict[AtlasName, tuple[int, int, int, int]] = {
    AtlasName.K5_MINUS: (5, 9, 4, 2),
    AtlasName.A4: (9, 21, 5, 4),
    AtlasName.A5: (11, 26, 5, 5),
    AtlasName.A6: (13, 31, 5, 6),
    AtlasName.A7: (15, 37, 5, 7),
}

_ATLAS_CACHE: dict[AtlasName, Graph] = {}


def _build_atlas(name: AtlasName) -> Graph:
    if name is AtlasName.K5_MINUS:
        edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        edges.remove((3, 4))
        return build_graph(5, edges)
    raw = _ATLAS_RAW[name]
    labels = sorted(set(raw) | {w for row in raw.values() for w in row})
    index = {label: i for i, label in enumerate(labels)}
    edges = [(index[v], index[w]) for v, row in raw.items() for w in row]
    return build_graph(len(labels), edges)


def atlas(name: AtlasName | str) -> Graph:
    """One of the five transcribed extremal graphs, statistics re-verified.

    A transcription error cannot pass silently: the first access checks
    order, size, maximum degree, matching number and planarity against the
    published values and raises AssertionError on any mismatch.
    """
    name = AtlasName(name)
    if name not in _ATLAS_CACHE:
        g = _build_atlas(name)
        n, m, maxdeg, nu = _ATLAS_STATS[name]
        got = (g.n, g.m, degree_stats(g)[0], matching_number(g))
        assert got == (n, m, maxdeg, nu), f"{name.value}: {got} != {(n, m, maxdeg, nu)}"
        assert is_planar(g).verdict, f"{name.value}: transcription is non-planar"
        _ATLAS_CACHE[name] = g
    return _ATLAS_CACHE[name]


def _unpack(params: ClassParams | int, nu: int | None) -> tuple[int, int]:
    if isinstance(params, ClassParams):
        if nu is not None:
            raise TypeError("pass either ClassParams or two integers, not both")
        return params.d, params.nu
    if nu is None:
        raise TypeError("missing nu")
    return params, nu


def pivotal_planar(params: ClassParams | int, nu: int | None = None) -> Graph:
    """The planar extremal family for (d, nu): meets max_edges_planar exactly.

    Disjoint union, largest components first: triangles for d=3, K'_4 or
    K5 minus an edge plus a leftover star for d in {4,5}, copies of A7
    with an A4/star remainder for d=6, and bare (d-1)-stars otherwise.
    """
    d, nu = _unpack(params, nu)
    k = nu - 1
    if d < 2 or k < 1:
        return build_graph(0, [])
    comps: list[Graph] = []
    if d == 2:
        comps = [complete(2)] * k
    elif d == 3:
        comps = [complete(3)] * k
    elif d == 4:
        comps = [k_prime(4)] * (k // 2) + [star(3)] * (k % 2)
    elif d == 5:
        comps = [atlas(AtlasName.K5_MINUS)] * (k // 2) + [star(4)] * (k % 2)
    elif d == 6:
        r = k % 7
        comps = [atlas(AtlasName.A7)] * (k // 7)
        if r >= 4:
            comps.append(atlas(AtlasName.A4))
            comps.extend([star(5)] * (r - 4))
        else:
            comps.extend([star(5)] * r)
    else:
        comps = [star(d - 1)] * k
    g = disjoint_union(*comps)
    assert g.m == max_edges_planar(d, nu)
    return g


def extremal_general(params: ClassParams | int, nu: int | None = None) -> Graph:
    """The unrestricted extremal family: meets max_edges_general exactly.

    With nu-1 = q*ceil((d-1)/2) + r, returns q copies of K'_d (d even) or
    K_d (d odd) followed by r stars K_{1,d-1}. Not planar in general.
    """
    d, nu = _unpack(params, nu)
    k = nu - 1
    if d < 2 or k < 1:
        return build_graph(0, [])
    c = d // 2
    q, r = divmod(k, c)
    big = k_prime(d) if d % 2 == 0 else complete(d)
    g = disjoint_union(*([big] * q + [star(d - 1)] * r))
    assert g.m == max_edges_general(d, nu)
    return g

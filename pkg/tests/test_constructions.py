from __future__ import annotations

import pytest

from planarext import (
    AtlasName,
    ClassParams,
    atlas,
    certificate,
    complete,
    connected_components,
    degree_stats,
    extremal_general,
    is_factor_critical,
    is_planar,
    k_prime,
    matching_number,
    max_edges_general,
    max_edges_planar,
    pivotal_planar,
    star,
)


ATLAS_STATS = {
    "K5_MINUS": (5, 9, 4, 2),
    "A4": (9, 21, 5, 4),
    "A5": (11, 26, 5, 5),
    "A6": (13, 31, 5, 6),
    "A7": (15, 37, 5, 7),
}


def test_atlas_statistics():
    for name, (n, m, maxdeg, nu) in ATLAS_STATS.items():
        g = atlas(name)
        assert g.n == n
        assert g.m == m
        assert degree_stats(g)[0] == maxdeg
        assert matching_number(g) == nu
        assert is_planar(g).verdict
        assert is_factor_critical(g)


def test_atlas_accepts_enum_and_string():
    assert atlas(AtlasName.A4).adj == atlas("A4").adj
    with pytest.raises(ValueError):
        atlas("A8")


def test_star_and_complete():
    s = star(5)
    assert s.n == 6 and s.m == 5
    assert degree_stats(s)[0] == 5
    k = complete(6)
    assert k.n == 6 and k.m == 15
    assert star(0).n == 1
    assert complete(1).m == 0


def test_k_prime_shape():
    # d+1 vertices; a near-perfect matching plus one extra edge removed,
    # so every degree is below d
    for d in (2, 4, 6, 8):
        g = k_prime(d)
        assert g.n == d + 1
        assert g.m == d * (d + 1) // 2 - d // 2 - 1
        assert degree_stats(g)[0] == d - 1
        assert matching_number(g) == d // 2
        if d >= 4:
            assert is_factor_critical(g)
    with pytest.raises(ValueError):
        k_prime(5)
    with pytest.raises(ValueError):
        k_prime(0)


def test_pivotal_certificates_grid():
    for d in range(2, 11):
        for nu in range(2, 14):
            g = pivotal_planar(d, nu)
            rep = certificate(g, d, nu)
            assert rep.tight, (d, nu)


def test_pivotal_component_structure():
    # d=6 splits the budget into blocks of 7 plus a remainder
    g = pivotal_planar(6, 9)  # budget 8 = 7 + 1
    comps = [c for c, _ in connected_components(g)]
    assert comps[0].n == 15 and comps[0].m == 37
    assert comps[1].n == 6 and comps[1].m == 5
    g = pivotal_planar(6, 7)  # budget 6 = remainder 6 -> 9-vertex block + stars
    comps = [c for c, _ in connected_components(g)]
    assert comps[0].n == 9 and comps[0].m == 21
    assert all(c.m == 5 for c in comps[1:])
    g = pivotal_planar(5, 6)  # budget 5 = two 5-vertex blocks + a star
    comps = [c for c, _ in connected_components(g)]
    assert [c.n for c in comps] == [5, 5, 5]
    assert [c.m for c in comps] == [9, 9, 4]


def test_pivotal_edge_cases():
    assert pivotal_planar(6, 1).n == 0
    assert pivotal_planar(1, 5).n == 0
    g = pivotal_planar(2, 4)  # three disjoint edges
    assert g.n == 6 and g.m == 3
    assert degree_stats(g)[0] == 1
    g = pivotal_planar(3, 5)  # four triangles
    assert g.n == 12 and g.m == 12


def test_class_params_validation():
    p = ClassParams(5, 7)
    assert pivotal_planar(p).m == max_edges_planar(5, 7)
    with pytest.raises(ValueError):
        ClassParams(5, 0)
    with pytest.raises(ValueError):
        ClassParams(0, 5)


def test_extremal_general_grid():
    for d in range(2, 11):
        for nu in range(2, 14):
            g = extremal_general(d, nu)
            maxdeg, _ = degree_stats(g)
            assert maxdeg < d
            assert matching_number(g) < nu
            assert g.m == max_edges_general(d, nu)


def test_extremal_general_not_always_planar():
    g = extremal_general(7, 4)  # complete blocks on 7 vertices
    assert not is_planar(g).verdict
    assert is_planar(extremal_general(3, 5)).verdict

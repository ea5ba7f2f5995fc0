from __future__ import annotations

import pytest

from planarext import (
    DegreeSequence,
    Graph,
    build_graph,
    complement,
    connected_components,
    degree_stats,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
)
from planarext.graphs import from_masks


def test_graph_basic_invariants():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.m == 4
    assert g.degrees == (2, 2, 2, 2)
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.edges() == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_build_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        build_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        build_graph(-1, [])


def test_build_graph_collapses_duplicates():
    g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_empty_and_single_vertex():
    empty = Graph(0, ())
    assert empty.n == 0 and empty.m == 0
    single = build_graph(1, [])
    assert single.n == 1 and single.m == 0
    assert is_connected(empty) and is_connected(single)


def test_from_masks_round_trip():
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    masks = tuple(
        sum(1 << w for w in g.adj[v]) for v in range(g.n)
    )
    assert from_masks(g.n, masks).adj == g.adj


def test_disjoint_union_offsets_labels():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(2, [(0, 1)])
    u = disjoint_union(a, b)
    assert u.n == 5 and u.m == 3
    assert u.has_edge(3, 4) and not u.has_edge(2, 3)
    assert disjoint_union().n == 0


def test_complement():
    g = build_graph(4, [(0, 1)])
    c = complement(g)
    assert c.m == 5 and not c.has_edge(0, 1) and c.has_edge(2, 3)
    assert complement(c).adj == g.adj


def test_degree_stats_sorted_descending():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    maxdeg, seq = degree_stats(g)
    assert maxdeg == 3
    assert seq.entries == (3, 1, 1, 1)


def test_induced_subgraph_relabels():
    g = build_graph(5, [(0, 2), (2, 4), (4, 0), (1, 3)])
    h = induced_subgraph(g, [0, 2, 4])
    assert h.n == 3 and h.m == 3
    with pytest.raises(ValueError):
        induced_subgraph(g, [0, 0])


def test_connected_components_structure():
    g = build_graph(6, [(0, 1), (1, 2), (3, 4)])
    comps = connected_components(g)
    assert [c.n for c, _ in comps] == [3, 2, 1]
    assert [labels for _, labels in comps] == [(0, 1, 2), (3, 4), (5,)]
    assert not is_connected(g)


def test_delete_vertex():
    g = build_graph(3, [(0, 1), (1, 2)])
    h = delete_vertex(g, 1)
    assert h.n == 2 and h.m == 0
    with pytest.raises(ValueError):
        delete_vertex(g, 5)


def test_degree_sequence_validation():
    seq = DegreeSequence([1, 3, 2, 2])
    assert seq.entries == (3, 2, 2, 1)
    assert seq.n == 4
    with pytest.raises(ValueError):
        DegreeSequence([1, 1, 1])
    with pytest.raises(ValueError):
        DegreeSequence([-1, 1])

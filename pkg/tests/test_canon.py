from __future__ import annotations

import random

from planarext import build_graph, canonical_form, complete, star
from planarext.graphs import from_masks

from oracles import all_labeled_graphs, min_perm_form, pair_group_class_count


def _relabel(masks, perm):
    n = len(masks)
    out = [0] * n
    for v in range(n):
        m = masks[v]
        while m:
            b = m & -m
            out[perm[v]] |= 1 << perm[b.bit_length() - 1]
            m ^= b
    return tuple(out)


def test_canonical_form_matches_permutation_classes_small():
    # exhaustive: two labeled graphs get equal forms iff truly isomorphic
    for n in range(5):
        by_canon: dict[bytes, tuple] = {}
        for masks in all_labeled_graphs(n):
            g = from_masks(n, masks)
            form = canonical_form(g)
            ref = min_perm_form(g)
            if form in by_canon:
                assert by_canon[form] == ref
            else:
                for other_form, other_ref in by_canon.items():
                    assert other_ref != ref or other_form == form
                by_canon[form] = ref


def test_class_counts_match_burnside():
    for n in range(1, 7):
        forms = {
            canonical_form(from_masks(n, masks)) for masks in all_labeled_graphs(n)
        }
        assert len(forms) == pair_group_class_count(n)


def test_known_class_counts():
    counts = {
        n: len({canonical_form(from_masks(n, m)) for m in all_labeled_graphs(n)})
        for n in (4, 5, 6)
    }
    assert counts == {4: 11, 5: 34, 6: 156}


def test_invariance_under_random_relabeling():
    rng = random.Random(7)
    for n in (6, 7, 8):
        for _ in range(40):
            masks = [0] * n
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < 0.4:
                        masks[u] |= 1 << v
                        masks[v] |= 1 << u
            g = from_masks(n, tuple(masks))
            form = canonical_form(g)
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(from_masks(n, _relabel(masks, perm))) == form


def test_nonisomorphic_pairs_distinguished():
    # same degree sequence, different graphs
    c6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert canonical_form(c6) != canonical_form(two_triangles)
    assert canonical_form(star(3)) != canonical_form(
        build_graph(4, [(0, 1), (1, 2), (2, 3)])
    )
    assert canonical_form(complete(4)) == canonical_form(
        build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    )


def test_vertex_colors_split_classes():
    g = build_graph(2, [])
    marked = canonical_form(g, colors=[1, 0])
    swapped = canonical_form(g, colors=[0, 1])
    assert marked == swapped  # color multiset equal, structure symmetric
    path = build_graph(3, [(0, 1), (1, 2)])
    end_marked = canonical_form(path, colors=[1, 0, 0])
    mid_marked = canonical_form(path, colors=[0, 1, 0])
    assert end_marked != mid_marked

from __future__ import annotations

import json

import pytest

from planarext import (
    atlas,
    build_graph,
    certificate,
    complete,
    dot_export,
    graph6_decode,
    graph6_encode,
    pivotal_planar,
    star,
)


def test_known_encodings():
    assert graph6_encode(build_graph(2, [(0, 1)])) == "A_"
    assert graph6_decode("A_").edges() == ((0, 1),)
    assert graph6_encode(build_graph(3, [(0, 1), (1, 2), (0, 2)])) == "Bw"
    assert graph6_encode(build_graph(0, [])) == "?"
    assert graph6_decode("?").n == 0


def test_round_trips():
    graphs = [
        build_graph(1, []),
        star(7),
        complete(6),
        atlas("A7"),
        pivotal_planar(6, 9),
        pivotal_planar(4, 13),
    ]
    for g in graphs:
        assert graph6_decode(graph6_encode(g)).adj == g.adj


def test_long_form_round_trip():
    g = pivotal_planar(10, 13)  # 120 vertices
    text = graph6_encode(g)
    assert text.startswith("~")
    assert graph6_decode(text).adj == g.adj
    h = build_graph(63, [(0, 62)])
    assert graph6_decode(graph6_encode(h)).adj == h.adj


def test_decode_rejects_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("A_extra")
    with pytest.raises(ValueError):
        graph6_decode("A")  # truncated
    with pytest.raises(ValueError):
        graph6_decode("\x1f_")  # byte below 63
    with pytest.raises(ValueError):
        graph6_decode("~~??")  # oversized-order marker
    with pytest.raises(ValueError):
        graph6_decode("~??")  # truncated long header
    # nonzero padding: K2 uses only the first of six bits
    assert graph6_decode("A_").m == 1
    with pytest.raises(ValueError):
        graph6_decode("A" + chr(63 + 1))  # padding bit set


def test_short_header_is_used_below_63():
    g = build_graph(62, [(0, 61)])
    text = graph6_encode(g)
    assert not text.startswith("~")
    assert graph6_decode(text).adj == g.adj
    with pytest.raises(ValueError):
        graph6_decode("~??" + chr(63 + 10))  # long form for a small order


def test_dot_export_shapes():
    single = dot_export(build_graph(1, []))
    assert single == "graph G {\n  0;\n}\n"
    k2 = dot_export(build_graph(2, [(0, 1)]))
    assert "  0 -- 1;" in k2 and k2.count("--") == 1
    a4 = dot_export(atlas("A4"))
    node_lines = [ln for ln in a4.splitlines() if ln.endswith(";") and "--" not in ln]
    edge_lines = [ln for ln in a4.splitlines() if "--" in ln]
    assert len(node_lines) == 9
    assert len(edge_lines) == 21
    labeled = dot_export(build_graph(2, [(0, 1)]), labels={0: "root"})
    assert '0 [label="root"];' in labeled


def test_certificate_fields_and_json():
    g = pivotal_planar(5, 4)
    rep = certificate(g, 5, 4)
    assert rep.tight
    assert rep.edge_count == rep.bound == 13
    assert rep.planar and rep.max_degree == 4 and rep.matching_number == 3
    payload = json.loads(rep.to_json())
    assert payload["params"] == {"d": 5, "nu": 4}
    assert payload["tight"] is True
    assert set(payload) == {
        "params",
        "graph_g6",
        "planar",
        "max_degree",
        "matching_number",
        "edge_count",
        "bound",
        "tight",
    }


def test_certificate_tight_requires_membership():
    k5 = complete(5)
    rep = certificate(k5, 5, 3)  # non-planar and over the bound
    assert rep.edge_count == 10 and rep.bound == 9
    assert not rep.planar
    assert not rep.tight
    # planar member below the bound: not tight either
    rep = certificate(star(4), 5, 3)
    assert rep.planar and rep.max_degree < 5 and rep.matching_number < 3
    assert not rep.tight

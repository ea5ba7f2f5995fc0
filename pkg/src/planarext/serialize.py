"""graph6 and DOT serialization, plus the single-graph certificate report.

graph6 packs the upper triangle of the adjacency matrix column-wise into
6-bit groups offset by 63. The header is the single byte n+63 for
n <= 62 and the standard long form (126 followed by three 6-bit digits
of n) above that, which the largest star-built families here need.
Decoding validates length, byte range and zero padding, so a truncated
or hand-mangled string never produces a silently wrong graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bounds import max_edges_planar
from .graphs import Graph, build_graph, degree_stats
from .matching import matching_number
from .planarity import is_planar


def graph6_encode(g: Graph) -> str:
    """graph6 string for g (short form for n <= 62, long form above)."""
    if g.n > 258047:
        raise ValueError("graph6 supports at most 258047 vertices")
    bits: list[int] = []
    for k in range(g.n):
        for j in range(k):
            bits.append(1 if g.has_edge(j, k) else 0)
    while len(bits) % 6:
        bits.append(0)
    if g.n <= 62:
        out = [chr(g.n + 63)]
    else:
        out = [
            chr(126),
            chr(((g.n >> 12) & 63) + 63),
            chr(((g.n >> 6) & 63) + 63),
            chr((g.n & 63) + 63),
        ]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Parse a graph6 string; strict about padding and length."""
    if not text:
        raise ValueError("empty graph6 string")
    data = [ord(ch) for ch in text]
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 bytes must be printable ASCII in [63, 126]")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 orders above 258047 are not supported")
        if len(data) < 4:
            raise ValueError("truncated long-form graph6 header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n <= 62:
            raise ValueError("long-form graph6 header used for an order under 63")
        header_len = 4
    else:
        n = data[0] - 63
        header_len = 1
    nbits = n * (n - 1) // 2
    expected = header_len + (nbits + 5) // 6
    if len(data) != expected:
        raise ValueError(
            f"graph6 length {len(data)} does not match order {n} (expected {expected})"
        )
    bits: list[int] = []
    for b in data[header_len:]:
        value = b - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("graph6 padding bits must be zero")
    edges = []
    idx = 0
    for k in range(n):
        for j in range(k):
            if bits[idx]:
                edges.append((j, k))
            idx += 1
    return build_graph(n, edges)


def dot_export(g: Graph, labels: dict[int, str] | None = None) -> str:
    """DOT text for g: one node line per vertex, one edge line per edge."""
    lines = ["graph G {"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CertificateReport:
    """Membership and tightness report for one graph against a class (d, nu)."""

    d: int
    nu: int
    graph_g6: str
    planar: bool
    max_degree: int
    matching_number: int
    edge_count: int
    bound: int
    tight: bool

    def to_json(self) -> str:
        payload = {
            "params": {"d": self.d, "nu": self.nu},
            "graph_g6": self.graph_g6,
            "planar": self.planar,
            "max_degree": self.max_degree,
            "matching_number": self.matching_number,
            "edge_count": self.edge_count,
            "bound": self.bound,
            "tight": self.tight,
        }
        return json.dumps(payload, indent=2)


def certificate(g: Graph, d: int, nu: int) -> CertificateReport:
    """Evaluate a graph against the planar class (d, nu) and its edge bound.

    tight means the graph is a class member (planar, max degree below d,
    matching number below nu) meeting the class maximum exactly.
    """
    planar = is_planar(g).verdict
    maxdeg, _ = degree_stats(g)
    nu_g = matching_number(g)
    bound = max_edges_planar(d, nu)
    tight = planar and maxdeg < d and nu_g < nu and g.m == bound
    return CertificateReport(
        d=d,
        nu=nu,
        graph_g6=graph6_encode(g),
        planar=planar,
        max_degree=maxdeg,
        matching_number=nu_g,
        edge_count=g.m,
        bound=bound,
        tight=tight,
    )

import io
import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cage8.field import field_new
from cage8.graph import BipartiteGraph
from cage8.graphio import (
    META_KEYS, ParseError, TooLarge, graph6_string, read_dimacs, read_edgelist, read_graph6,
    read_vertex_set, write_dimacs, write_edgelist, write_graph6, write_metadata, write_vertex_set,
    _size_prefix,
)
from cage8.pds import derive

from helpers import gamma


def dump(writer, g):
    buf = io.StringIO()
    writer(g, buf)
    return buf.getvalue()


def test_single_edge_edgelist():
    g = BipartiteGraph([{1}, {0}], [0, 1], ids=[0, 31])
    text = dump(write_edgelist, g)
    lines = text.splitlines()
    assert lines[-1] == "0 31"
    assert sum(l.startswith("#v") for l in lines) == 2
    assert read_edgelist(io.StringIO(text)) == g


def test_gamma2_edgelist():
    text = dump(write_edgelist, gamma(2))
    edges = [l for l in text.splitlines() if not l.startswith("#")]
    assert len(edges) == 45
    pairs = [tuple(map(int, e.split())) for e in edges]
    assert all(u < w for u, w in pairs) and pairs == sorted(pairs)
    assert "#v 14 0:(inf,inf,inf)" in text and "#v 29 1:(inf,inf,inf)" in text


def test_malformed_line():
    with pytest.raises(ParseError) as exc:
        read_edgelist(io.StringIO("#v 0 0\n0 1\n0 x\n"))
    assert exc.value.line == 3


@pytest.mark.parametrize("q", [2, 3, 4])
def test_roundtrip_gamma(q):
    g = gamma(q)
    back = read_edgelist(io.StringIO(dump(write_edgelist, g)))
    assert back == g
    assert back.labels == g.labels and back.ids == g.ids


def test_roundtrip_derived_keeps_global_ids():
    out, _ = derive(4, "S")
    back = read_edgelist(io.StringIO(dump(write_edgelist, out)))
    assert back == out and back.ids == out.ids


def test_graph6_examples():
    assert graph6_string(BipartiteGraph([set(), set()], [0, 1])) == "A?"
    assert graph6_string(BipartiteGraph([{1}, {0}], [0, 1])) == "A_"
    with pytest.raises(TooLarge):
        _size_prefix(68719476736)


@pytest.mark.parametrize("q", [2, 3])
def test_graph6_matches_networkx(q):
    g = gamma(q)
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    want = nx.to_graph6_bytes(G, header=False).decode().strip()
    assert graph6_string(g) == want
    back = read_graph6(io.StringIO(want))
    assert back.adj == g.adj


def test_dimacs():
    text = dump(write_dimacs, gamma(2))
    lines = text.splitlines()
    assert lines[0] == "p edge 30 45" and len(lines) == 46
    back = read_dimacs(io.StringIO(text))
    assert back.adj == gamma(2).adj
    with pytest.raises(ParseError):
        read_dimacs(io.StringIO("p edge 2 1\ne 1 3\n"))


def test_determinism():
    g = gamma(3)
    for w in (write_edgelist, write_dimacs, write_graph6):
        assert dump(w, g) == dump(w, gamma(3).induced(range(g.order)))


def test_metadata():
    buf = io.StringIO()
    meta = write_metadata(None, field_new(3), buf, g=gamma(3))
    parsed = json.loads(buf.getvalue())
    assert tuple(parsed) == META_KEYS
    assert (parsed["order"], parsed["degree"], parsed["girth"], parsed["excess"]) == (80, 4, 8, 0)
    assert parsed["family"] is None and parsed["removed"] is None
    assert parsed["modulus"] == [0, 1] and meta == parsed

    out, spec = derive(4, "S")
    buf = io.StringIO()
    write_metadata(spec, field_new(4), buf, g=out)
    parsed = json.loads(buf.getvalue())
    assert (parsed["removed"], parsed["order"], parsed["family"]) == (40, 72, "S")


def test_vertex_set_roundtrip():
    g = gamma(2)
    buf = io.StringIO()
    write_vertex_set(g, [5, 1, 3], buf)
    assert read_vertex_set(io.StringIO(buf.getvalue())) == [1, 3, 5]
    with pytest.raises(ParseError):
        read_vertex_set(io.StringIO("1\nfoo\n"))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.floats(0.05, 1), st.integers(0, 10**6))
def test_roundtrip_random_bipartite(m, n, p, seed):
    G = nx.bipartite.random_graph(m, n, p, seed=seed)
    g = BipartiteGraph([set(G[i]) for i in range(m + n)], [0] * m + [1] * n)
    assert read_edgelist(io.StringIO(dump(write_edgelist, g))) == g
    assert read_dimacs(io.StringIO(dump(write_dimacs, g))).adj == g.adj
    assert read_graph6(io.StringIO(dump(write_graph6, g))).adj == g.adj

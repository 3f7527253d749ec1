import random

import networkx as nx
import pytest
from hypothesis import given, settings

from c5crit import Graph, graph6_decode, graph6_encode, make_named, read_graphs
from c5crit.errors import ParseError
from c5crit.formats import _size_prefix, write_edge_list, write_graph6_lines
from oracles import from_nx, to_nx
from test_graph import graphs


def nx_encode(G):
    return nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


def test_single_vertex():
    assert graph6_encode(Graph(1)) == "@"
    assert graph6_encode(Graph(0)) == "?"
    assert graph6_decode("@") == Graph(1)


def test_known_strings():
    assert graph6_encode(make_named("cycle5")) == nx_encode(make_named("cycle5"))
    assert graph6_encode(make_named("petersen")) == "IheA@GUAo"


@pytest.mark.parametrize("name", ["cycle3", "cycle11", "path4", "theta(2,3,5)", "e1", "e2",
                                  "petersen", "k6"])
def test_round_trip_named(name):
    G = make_named(name)
    assert graph6_decode(graph6_encode(G)) == G


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_round_trip_and_reference(G):
    s = graph6_encode(G)
    assert graph6_decode(s) == G
    assert s == nx_encode(G)
    assert from_nx(nx.from_graph6_bytes(s.encode())) == G


def test_large_orders():
    rng = random.Random(5)
    for n in (62, 63, 64, 100, 200):
        G = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.05])
        s = graph6_encode(G)
        assert s == nx_encode(G)
        assert graph6_decode(s) == G
    assert _size_prefix(258048)[:2] == b"~~"
    with pytest.raises(ValueError):
        _size_prefix(-1)


def test_header_and_whitespace():
    assert graph6_decode(">>graph6<<Dhc\n") == make_named("cycle5")
    assert graph6_decode(b"  Dhc  ") == make_named("cycle5")


@pytest.mark.parametrize("line,offset", [
    ("", 0), ("D", 1), ("Dhcc", 3), ("D h", 1), ("~", 1), ("~~??", 4), ("Bx", 1),
    (">>graph6<<D!c", 11),
])
def test_parse_errors(line, offset):
    with pytest.raises(ParseError) as err:
        graph6_decode(line)
    assert err.value.offset == offset
    assert f"byte {offset}" in str(err.value)


def test_read_graphs_auto():
    text = "# two graphs\nDhc\nBw\n"
    assert [G.n for G in read_graphs(text)] == [5, 3]
    el = write_edge_list(make_named("cycle5"))
    assert list(read_graphs(el)) == [make_named("cycle5")]
    assert list(read_graphs(el, "edgelist")) == [make_named("cycle5")]
    assert write_graph6_lines([make_named("cycle5"), Graph(1)]) == "Dhc\n@\n"

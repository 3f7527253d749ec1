import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from c5crit import (
    INFINITE,
    Graph,
    build_graph,
    cycle_report,
    identify_vertices,
    is_biconnected,
    make_named,
    potential,
    subdivide_all_edges,
)
from c5crit.errors import InvalidVertex, LoopRejected, ParseError, SameVertex, WouldCreateLoop
from c5crit.graph import articulation_points, cycles_up_to, read_edge_list, write_edge_list
from oracles import atlas_by_order, brute_cycles, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_build_c5():
    G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert (G.n, G.e) == (5, 5)


def test_single_vertex_potential():
    assert potential(build_graph(1, [])) == 5


def test_duplicates_collapse():
    G = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert G.e == 2
    assert G.edges == ((0, 1), (1, 2))


def test_build_errors():
    with pytest.raises(InvalidVertex):
        build_graph(3, [(0, 3)])
    with pytest.raises(LoopRejected):
        build_graph(3, [(1, 1)])


@pytest.mark.parametrize("k", range(3, 12))
def test_cycle_potential(k):
    assert potential(make_named(f"cycle({k})")) == k


@pytest.mark.parametrize("k", range(0, 8))
def test_path_potential(k):
    assert potential(make_named("path", k)) == 5 + k


def test_e1_potential():
    assert potential(make_named("e1")) == 2
    assert potential(make_named("e2")) == 2


def test_cycle_report_c5():
    rep = cycle_report(make_named("cycle5"), 8)
    assert (rep.girth, rep.odd_girth, rep.even_cycles) == (5, 5, ())


def test_cycle_report_e1_has_8_cycle():
    G = make_named("e1")
    rep = cycle_report(G, 8)
    assert rep.girth == 5
    lengths = {len(c) for c in rep.even_cycles}
    assert 8 in lengths
    # the cycle v1 v2 v3 v4 hub v7 v8 v9 from the documented labeling
    assert (0, 1, 2, 3, 9, 6, 7, 8) in rep.even_cycles
    oracle = {c for c in brute_cycles(G, 8) if len(c) % 2 == 0}
    assert len(oracle) == len(rep.even_cycles)


def test_cycle_report_tree():
    rep = cycle_report(make_named("path", 6), 8)
    assert rep.girth == INFINITE and rep.odd_girth == INFINITE
    assert rep.even_cycles == () and rep.witness_cycle is None


def test_cycle_report_bound_checked():
    with pytest.raises(ValueError):
        cycle_report(make_named("cycle5"), 3)


def _witness_ok(G, cyc, length):
    return (len(cyc) == length and len(set(cyc)) == length
            and all(G.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)))


@pytest.mark.parametrize("n", range(1, 8))
def test_girth_matches_oracle_on_atlas(n):
    for G in atlas_by_order()[n]:
        rep = cycle_report(G, 8)
        H = to_nx(G)
        g = nx.girth(H)
        assert rep.girth == g
        assert rep.girth <= rep.odd_girth
        if rep.girth != INFINITE:
            assert _witness_ok(G, rep.witness_cycle, rep.girth)
        cycles = brute_cycles(G, 8)
        odd = [len(c) for c in cycles if len(c) % 2]
        assert rep.odd_girth == (min(odd) if odd else INFINITE)
        assert len(rep.even_cycles) == sum(1 for c in cycles if len(c) % 2 == 0)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_cycles_match_oracle(G):
    mine = cycles_up_to(G, 8)
    as_sets = {frozenset(frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))) for c in mine}
    assert len(as_sets) == len(mine)
    assert as_sets == brute_cycles(G, 8)


def test_biconnected_examples():
    assert is_biconnected(make_named("cycle5"))
    bowtie = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert not is_biconnected(bowtie)
    assert articulation_points(bowtie) == [2]
    assert is_biconnected(make_named("e2"))
    assert not is_biconnected(build_graph(2, [(0, 1)]))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_biconnected_matches_networkx(G):
    H = to_nx(G)
    expected = G.n >= 3 and nx.is_connected(H) and nx.is_biconnected(H)
    assert is_biconnected(G) == expected
    if G.n:
        assert sorted(articulation_points(G)) == sorted(nx.articulation_points(H))


def test_identify_path_ends():
    G = identify_vertices(make_named("path", 2), 0, 2)
    assert (G.n, G.e) == (2, 1)


def test_identify_c6_antipodal():
    G = identify_vertices(make_named("cycle6"), 0, 3)
    assert (G.n, G.e) == (5, 6)
    assert not is_biconnected(G)
    assert articulation_points(G) == [0]


def test_identify_errors():
    C5 = make_named("cycle5")
    with pytest.raises(WouldCreateLoop):
        identify_vertices(C5, 0, 1)
    with pytest.raises(SameVertex):
        identify_vertices(C5, 2, 2)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.data())
def test_identify_edge_count(G, data):
    pairs = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)]
    if not pairs:
        return
    u, v = data.draw(st.sampled_from(pairs))
    H = identify_vertices(G, u, v)
    common = len(set(G.neighbors(u)) & set(G.neighbors(v)))
    assert H.n == G.n - 1
    assert H.e == G.e - common
    # the merged vertex takes min(u, v); ids above max(u, v) shift down
    merged = set(G.neighbors(u)) | set(G.neighbors(v))
    shift = [x if x < max(u, v) else x - 1 for x in sorted(merged)]
    assert list(H.neighbors(min(u, v))) == sorted(shift)


def test_subdivide_k6():
    G = subdivide_all_edges(make_named("k6"), 2)
    assert (G.n, G.e) == (36, 45)


def test_subdivide_c3_is_c9():
    G = subdivide_all_edges(make_named("cycle3"), 2)
    assert (G.n, G.e) == (9, 9)
    assert all(d == 2 for d in G.degrees()) and G.is_connected()


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(0, 3))
def test_subdivide_counts(G, k):
    H = subdivide_all_edges(G, k)
    assert (H.n, H.e) == (G.n + k * G.e, (k + 1) * G.e)
    if k == 0:
        assert H == G


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.data())
def test_potential_additivity(G, data):
    keep = data.draw(st.lists(st.sampled_from(G.edges), unique=True) if G.edges else st.just([]))
    H = Graph(G.n, keep)
    assert potential(G) == potential(H) + 5 * (G.n - H.n) - 4 * (G.e - H.e)


def test_distances_infinite_between_components():
    G = build_graph(4, [(0, 1), (2, 3)])
    assert G.distance(0, 3) == math.inf
    assert G.components() == [[0, 1], [2, 3]]


def test_edge_list_round_trip():
    G = make_named("petersen")
    assert read_edge_list(write_edge_list(G)) == G
    text = "# a comment\n3 2\n0 1  # trailing\n1 2\n"
    assert read_edge_list(text).edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "3\n", "3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 x\n"])
def test_edge_list_errors(text):
    with pytest.raises((ParseError, InvalidVertex)):
        read_edge_list(text)

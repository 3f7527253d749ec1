import pytest

from c5crit import (
    Graph,
    family_X,
    make_named,
    ore_6critical,
    ore_compose,
    potential,
    subdivide_all_edges,
)
from c5crit.constructions import FAMILIES, FAMILY_DELTAS
from c5crit.errors import InvalidComposition, InvalidConstruction
from oracles import is_k_critical


def test_named_counts():
    assert (make_named("e1").n, make_named("e1").e) == (10, 12)
    assert (make_named("e2").n, make_named("e2").e) == (10, 12)
    T = make_named("theta", 2, 3, 5)
    assert (T.n, T.e, potential(T)) == (9, 10, 5)
    P = make_named("petersen")
    assert (P.n, P.e) == (10, 15) and set(P.degrees()) == {3}
    assert make_named("k6").e == 15


def test_e1_labeling():
    E1 = make_named("e1")
    assert E1.neighbors(9) == (0, 3, 6)
    assert all(E1.has_edge(i, (i + 1) % 9) for i in range(9))


def test_e2_labeling():
    E2 = make_named("e2")
    u, v, x1, x2, x3, y1, y2, y3, z1, z2 = range(10)
    for cyc in ((u, v, x1, x2, x3), (u, v, y1, y2, y3)):
        assert all(E2.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
    assert E2.has_edge(x2, z1) and E2.has_edge(z1, z2) and E2.has_edge(z2, y2)


def test_name_forms():
    assert make_named("cycle(5)") == make_named("cycle5") == make_named("cycle", 5)
    assert make_named("theta(1,2,2)").n == 4


@pytest.mark.parametrize("bad", [("theta", 2, 1, 3), ("theta", 1, 1, 3), ("theta", 0, 2, 3),
                                 ("cycle", 2), ("nosuch",), ("e1", 3)])
def test_invalid_constructions(bad):
    with pytest.raises(InvalidConstruction):
        make_named(*bad)


def test_ore_compose_k6():
    K6 = make_named("k6")
    G = ore_compose(K6, (0, 1), K6, 0, ([1, 2], [3, 4, 5]))
    assert (G.n, G.e) == (11, 29)
    assert is_k_critical(G, 6)


def test_ore_compose_errors():
    K6 = make_named("k6")
    with pytest.raises(InvalidComposition):
        ore_compose(K6.delete_edge(0, 1), (0, 1), K6, 0, ([1], [2, 3, 4, 5]))
    with pytest.raises(InvalidComposition):
        ore_compose(K6, (0, 1), K6, 0, ([], [1, 2, 3, 4, 5]))
    with pytest.raises(InvalidComposition):
        ore_compose(K6, (0, 1), K6, 0, ([1, 2], [3, 4]))


@pytest.mark.parametrize("m", range(1, 11))
def test_ore_chain_counts(m):
    st = ore_6critical(m)
    assert (st.graph.n, st.graph.e) == (5 * m + 1, 14 * m + 1)
    assert len(st.history) == m - 1
    S = subdivide_all_edges(st.graph, 2)
    assert (S.n, S.e) == (33 * m + 3, 42 * m + 3)


@pytest.mark.parametrize("m", [1, 2])
def test_ore_chain_six_critical(m):
    assert is_k_critical(ore_6critical(m).graph, 6)


def test_ore_invalid():
    with pytest.raises(InvalidConstruction):
        ore_6critical(0)


def test_family_sizes_c5():
    C5 = make_named("cycle5")
    assert len(list(family_X(C5, "P2"))) == 10
    P3 = list(family_X(C5, "P3"))
    assert len(P3) == 10
    assert all((G.n, G.e, potential(G)) == (7, 8, 3) for G in P3)


def test_family_q_of_k2_is_empty():
    # Q needs three distinct attachment vertices
    assert list(family_X(Graph(2, [(0, 1)]), "Q")) == []


@pytest.mark.parametrize("base", ["cycle5", "path3", "theta(1,2,2)", "k4"])
@pytest.mark.parametrize("which", FAMILIES)
def test_family_potential_deltas(base, which):
    H = make_named(base)
    dn, de = FAMILY_DELTAS[which]
    members = list(family_X(H, which))
    for G in members:
        assert (G.n - H.n, G.e - H.e) == (dn, de)
        assert potential(G) == potential(H) + 5 * dn - 4 * de
        assert G.induced(range(H.n)) == H


def test_family_q_counts():
    H = make_named("cycle5")
    q = list(family_X(H, "Q"))
    # (1,3,3): 5 choices of x1 times C(4,2); (2,2,3): C(5,2) times 3
    assert len(q) == 5 * 6 + 10 * 3
    qp = list(family_X(H, "Qprime"))
    assert qp == []  # no vertex of C5 has degree three
    T = make_named("theta(1,2,2)")
    qp = list(family_X(T, "Qprime"))
    assert qp and all(G in set(family_X(T, "Q")) for G in qp)


def test_family_exceptional_counts():
    H = make_named("path2")
    E1 = make_named("e1")
    members = list(family_X(H, "E1fam"))
    per_vertex = {2: 3 ** 2 - 3, 3: 3 ** 3 - 3}
    assert len(members) == sum(per_vertex[d] for d in E1.degrees())


def test_family_x_union():
    H = make_named("cycle5")
    xs = list(family_X(H, "X"))
    assert xs[0] == H
    expected = 1 + sum(len(list(family_X(H, f))) for f in ("P2", "P3", "Q", "E1fam", "E2fam"))
    assert len(xs) == expected
    with pytest.raises(InvalidConstruction):
        list(family_X(H, "nope"))
    with pytest.raises(InvalidConstruction):
        list(family_X(Graph(0), "P2"))

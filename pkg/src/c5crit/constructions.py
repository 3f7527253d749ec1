"""Named graphs and graph families.

Labelings (all deterministic):

* ``cycle(k)``: ``0-1-...-(k-1)-0``; ``path(k)``: ``k`` edges on ``0..k``.
* ``theta(a, b, c)``: hubs 0 and 1, then the internal vertices of the arms
  of length ``a``, ``b``, ``c`` in that order, each arm read from hub 0.
* ``e1``: the 9-cycle ``0..8`` plus vertex 9 adjacent to 0, 3 and 6.
* ``e2``: ``u=0, v=1, x1..x3=2..4, y1..y3=5..7, z1=8, z2=9`` for the 5-cycles
  ``u v x1 x2 x3`` and ``u v y1 y2 y3`` plus the path ``x2 z1 z2 y2``.
* ``petersen``: outer cycle 0..4, spokes ``i-(i+5)``, inner pentagram.
* ``k<m>``: complete graph.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InvalidComposition, InvalidConstruction
from .graph import Graph


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidConstruction(f"cycle length must be >= 3, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 0:
        raise InvalidConstruction(f"path length must be >= 0, got {k}")
    return Graph(k + 1, [(i, i + 1) for i in range(k)])


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise InvalidConstruction(f"complete graph needs >= 1 vertex, got {k}")
    return Graph(k, itertools.combinations(range(k), 2))


def theta_graph(a: int, b: int, c: int) -> Graph:
    if not 1 <= a <= b <= c:
        raise InvalidConstruction(f"theta arms must satisfy 1 <= a <= b <= c, got {(a, b, c)}")
    if b == 1:
        raise InvalidConstruction("at most one theta arm may have length 1")
    edges = []
    nxt = 2
    for length in (a, b, c):
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges)


def e1_graph() -> Graph:
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(9, 0), (9, 3), (9, 6)]
    return Graph(10, edges)


def e2_graph() -> Graph:
    u, v, x1, x2, x3, y1, y2, y3, z1, z2 = range(10)
    edges = [
        (u, v), (v, x1), (x1, x2), (x2, x3), (x3, u),
        (v, y1), (y1, y2), (y2, y3), (y3, u),
        (x2, z1), (z1, z2), (z2, y2),
    ]
    return Graph(10, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


_NAME = re.compile(r"^\s*([a-z]+)\s*(\d*)\s*(?:\(([^)]*)\))?\s*$")


def make_named(name: str, *args: int) -> Graph:
    """Build a named graph: ``"e1"``, ``"cycle(5)"``, ``"theta", 2, 3, 5`` ..."""
    m = _NAME.match(name.lower())
    if not m:
        raise InvalidConstruction(f"unknown construction {name!r}")
    base, suffix, inner = m.groups()
    params = list(args)
    if suffix:
        params.insert(0, int(suffix))
    if inner:
        try:
            params.extend(int(x) for x in inner.split(",") if x.strip())
        except ValueError:
            raise InvalidConstruction(f"bad parameters in {name!r}") from None

    def want(k):
        if len(params) != k:
            raise InvalidConstruction(f"{base} takes {k} parameter(s), got {params}")

    if base in ("cycle", "c"):
        want(1)
        return cycle_graph(params[0])
    if base in ("path", "p"):
        want(1)
        return path_graph(params[0])
    if base == "theta":
        want(3)
        return theta_graph(*params)
    if base == "k" or base == "complete":
        want(1)
        return complete_graph(params[0])
    if base == "e":
        want(1)
        base = f"e{params[0]}"
        params = []
    if base in ("e1", "e2", "petersen"):
        want(0)
        return {"e1": e1_graph, "e2": e2_graph, "petersen": petersen_graph}[base]()
    raise InvalidConstruction(f"unknown construction {name!r}")


# -- Ore / DHGO composition ------------------------------------------------


def ore_compose(G1: Graph, xy: Sequence[int], G2: Graph, z: int, split) -> Graph:
    """Glue ``G1 - xy`` to ``G2`` with ``z`` split into ``x`` and ``y``.

    ``split = (A, B)`` partitions the neighbors of ``z``; ``x`` inherits the
    edges to ``A`` and ``y`` those to ``B``.  ``G1`` keeps its ids and the
    vertices of ``G2 - z`` follow in ascending order.
    """
    x, y = xy
    if not (0 <= x < G1.n and 0 <= y < G1.n) or not G1.has_edge(x, y):
        raise InvalidComposition(f"{tuple(xy)} is not an edge of G1")
    if not 0 <= z < G2.n:
        raise InvalidComposition(f"vertex {z} not in G2")
    part_a, part_b = (set(p) for p in split)
    if not part_a or not part_b:
        raise InvalidComposition("both parts of the split must be nonempty")
    if part_a & part_b or part_a | part_b != set(G2.neighbors(z)):
        raise InvalidComposition("split must partition the neighborhood of z")
    rest = [v for v in G2.vertices() if v != z]
    new_id = {v: G1.n + i for i, v in enumerate(rest)}
    edges = [e for e in G1.edges if set(e) != {x, y}]
    for a, b in G2.edges:
        if z not in (a, b):
            edges.append((new_id[a], new_id[b]))
    edges += [(x, new_id[a]) for a in sorted(part_a)]
    edges += [(y, new_id[b]) for b in sorted(part_b)]
    return Graph(G1.n + G2.n - 1, edges)


@dataclass
class OreState:
    m: int
    graph: Graph
    history: list = field(default_factory=list)


def ore_6critical(m: int) -> OreState:
    """6-critical graph with ``5m + 1`` vertices and ``14m + 1`` edges.

    Each step composes the current graph (its lowest edge) with a fresh
    ``K6`` split at vertex 0 into neighbor parts ``{1, 2}`` and ``{3, 4, 5}``.
    """
    if m < 1:
        raise InvalidConstruction(f"m must be >= 1, got {m}")
    k6 = complete_graph(6)
    state = OreState(1, k6, [])
    for step in range(2, m + 1):
        xy = state.graph.edges[0]
        nbrs = list(k6.neighbors(0))
        half = len(nbrs) // 2
        split = (nbrs[:half], nbrs[half:])
        graph = ore_compose(state.graph, xy, k6, 0, split)
        state = OreState(
            step, graph, state.history + [{"edge": xy, "vertex": 0, "split": split}]
        )
    g = state.graph
    if (g.n, g.e) != (5 * m + 1, 14 * m + 1):
        raise AssertionError(f"Ore chain count mismatch at m={m}: {(g.n, g.e)}")
    return state


# -- extension families ----------------------------------------------------

FAMILIES = ("P2", "P3", "Q", "Qprime", "E1fam", "E2fam")

# (new vertices, new edges) contributed by a member of each family
FAMILY_DELTAS = {
    "P2": (1, 2),
    "P3": (2, 3),
    "Q": (5, 7),
    "Qprime": (5, 7),
    "E1fam": (9, 12),
    "E2fam": (9, 12),
}


def _attach_paths(H: Graph, hub_new: bool, legs) -> Graph:
    """Add paths to ``H``; ``legs`` is a list of (start, length, end).

    New vertices are numbered from ``H.n`` in the order the paths are listed,
    after the hub (when ``hub_new``), each path read from its start.
    """
    nxt = H.n + (1 if hub_new else 0)
    edges = []
    for start, length, end in legs:
        chain = [start] + list(range(nxt, nxt + length - 1)) + [end]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
    return H.add_vertices(nxt - H.n, edges)


def _paths(H: Graph, length: int) -> Iterator[Graph]:
    for a, b in itertools.combinations(H.vertices(), 2):
        yield _attach_paths(H, False, [(a, length, b)])


def _q(H: Graph, prime: bool) -> Iterator[Graph]:
    z = H.n
    verts = list(H.vertices())
    if not prime:
        # (1, 3, 3): x1 by an edge, x2 < x3 by 3-edge paths
        for x1 in verts:
            for x2, x3 in itertools.combinations([v for v in verts if v != x1], 2):
                yield _attach_paths(H, True, [(z, 1, x1), (z, 3, x2), (z, 3, x3)])
    # (2, 2, 3): x1 < x2 by 2-edge paths, x3 by a 3-edge path
    for x1, x2 in itertools.combinations(verts, 2):
        if prime and not (H.has_edge(x1, x2) and max(H.degree(x1), H.degree(x2)) >= 3):
            continue
        for x3 in verts:
            if x3 not in (x1, x2):
                yield _attach_paths(H, True, [(z, 2, x1), (z, 2, x2), (z, 3, x3)])


def _exceptional(H: Graph, E: Graph) -> Iterator[Graph]:
    for v in E.vertices():
        k = E.degree(v)
        if k not in (2, 3):
            continue
        rest = [x for x in E.vertices() if x != v]
        new_id = {x: H.n + i for i, x in enumerate(rest)}
        body = [(new_id[a], new_id[b]) for a, b in E.edges if v not in (a, b)]
        nbrs = E.neighbors(v)
        for targets in itertools.product(H.vertices(), repeat=k):
            if len(set(targets)) == 1:
                continue
            legs = [(new_id[w], u) for w, u in zip(nbrs, targets)]
            yield H.add_vertices(len(rest), body + legs)


def family_X(H: Graph, which: str) -> Iterator[Graph]:
    """Stream every labeled member of one extension family of ``H``.

    ``which`` is one of ``P2, P3, Q, Qprime, E1fam, E2fam``, or ``X`` for
    ``H`` followed by all families except ``Qprime`` (which lies inside ``Q``).
    No isomorphism reduction is done.
    """
    if H.n == 0:
        raise InvalidConstruction("H must be nonempty")
    if which == "X":
        yield H
        for fam in ("P2", "P3", "Q", "E1fam", "E2fam"):
            yield from family_X(H, fam)
        return
    if which == "P2":
        yield from _paths(H, 2)
    elif which == "P3":
        yield from _paths(H, 3)
    elif which == "Q":
        yield from _q(H, prime=False)
    elif which == "Qprime":
        yield from _q(H, prime=True)
    elif which == "E1fam":
        yield from _exceptional(H, e1_graph())
    elif which == "E2fam":
        yield from _exceptional(H, e2_graph())
    else:
        raise InvalidConstruction(f"unknown family {which!r}")

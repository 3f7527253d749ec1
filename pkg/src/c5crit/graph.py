"""Immutable simple graphs on vertex ids ``0..n-1`` and basic surgeries."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import InvalidVertex, LoopRejected, ParseError, SameVertex, WouldCreateLoop

INFINITE = math.inf


class Graph:
    """A simple undirected graph with dense integer vertex ids.

    Neighbor lists are kept sorted so every traversal is deterministic.
    Instances are immutable; surgeries return new graphs.
    """

    __slots__ = ("_n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidVertex(f"vertex count must be non-negative, got {n}")
        masks = [0] * n
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopRejected(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._init_from_masks(n, masks)

    def _init_from_masks(self, n, masks):
        self._n = n
        self._masks = tuple(masks)
        self._adj = tuple(tuple(_bits(m)) for m in masks)
        self._edges = tuple((u, v) for u in range(n) for v in self._adj[u] if u < v)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks (trusted: symmetric, loop-free)."""
        g = cls.__new__(cls)
        g._init_from_masks(len(masks), masks)
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def e(self) -> int:
        return len(self._edges)

    vertex_count = n
    edge_count = e

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def masks(self) -> tuple:
        return self._masks

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise InvalidVertex(f"vertex {v!r} not in 0..{self._n - 1}")

    def __eq__(self, other):
        return isinstance(other, Graph) and self._masks == other._masks

    def __hash__(self):
        return hash(self._masks)

    def __repr__(self):
        return f"Graph(n={self._n}, e={self.e})"

    # -- derived graphs ----------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        masks = list(self._masks)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph.from_masks(masks)

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self._n, list(self._edges) + [tuple(p) for p in pairs])

    def add_vertices(self, k: int, pairs: Iterable[Sequence[int]] = ()) -> "Graph":
        return Graph(self._n + k, list(self._edges) + [tuple(p) for p in pairs])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``; survivors are renumbered in ascending order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            [(index[u], index[v]) for u, v in self._edges if u in index and v in index],
        )

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.induced(v for v in range(self._n) if v not in drop)

    def without_isolated(self) -> "Graph":
        return self.induced(v for v in range(self._n) if self._adj[v])

    # -- traversal ---------------------------------------------------------

    def distances_from(self, s: int) -> list:
        """BFS distances from ``s``; unreachable vertices get ``INFINITE``."""
        dist = [INFINITE] * self._n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in self._adj[u]:
                if dist[w] == INFINITE:
                    dist[w] = du
                    queue.append(w)
        return dist

    def distance(self, u: int, v: int):
        return self.distances_from(u)[v]

    def components(self) -> list:
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [s], [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; duplicate pairs collapse, loops are rejected."""
    return Graph(n, edges)


def potential(G: Graph) -> int:
    return 5 * G.n - 4 * G.e


# -- cycles ----------------------------------------------------------------


@dataclass(frozen=True)
class CycleReport:
    girth: float
    odd_girth: float
    witness_cycle: Optional[tuple] = None
    even_cycles: tuple = field(default=())


def _shortest_cycle(G: Graph):
    best, witness = INFINITE, None
    best_odd = INFINITE
    n = G.n
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    # non-tree edge, seen once from each side
                    length = dist[u] + dist[w] + 1
                    if length < best:
                        best = length
                        witness = (s, u, w, list(parent))
                    if dist[u] == dist[w] and length < best_odd:
                        best_odd = length
    if witness is not None:
        s, u, w, parent = witness
        left = [u]
        while left[-1] != s:
            left.append(parent[left[-1]])
        right = [w]
        while right[-1] != s:
            right.append(parent[right[-1]])
        cycle = left[::-1] + right[:-1]
        # at the global minimum the two tree paths meet only at s
        assert len(set(cycle)) == len(cycle) == best
        witness = tuple(cycle)
    return best, best_odd, witness


def girth(G: Graph):
    return _shortest_cycle(G)[0]


def cycles_up_to(G: Graph, max_length: int, parity: Optional[int] = None) -> list:
    """All cycles of length ``<= max_length`` as vertex sequences.

    Each cycle is listed once: it starts at its smallest vertex and its second
    vertex is smaller than its last.  ``parity`` filters by length mod 2.
    """
    found = []
    adj = [G.neighbors(v) for v in G.vertices()]
    for s in G.vertices():
        path = [s]
        on_path = {s}

        def extend(u):
            for w in adj[u]:
                if w == s:
                    k = len(path)
                    if k >= 3 and path[1] < path[-1] and (parity is None or k % 2 == parity):
                        found.append(tuple(path))
                elif w > s and w not in on_path and len(path) < max_length:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    found.sort(key=lambda c: (len(c), c))
    return found


def cycle_report(G: Graph, max_even_length: int = 8) -> CycleReport:
    if max_even_length < 4:
        raise ValueError("max_even_length must be at least 4")
    g, og, witness = _shortest_cycle(G)
    evens = cycles_up_to(G, max_even_length, parity=0)
    return CycleReport(girth=g, odd_girth=og, witness_cycle=witness, even_cycles=tuple(evens))


# -- connectivity ----------------------------------------------------------


def articulation_points(G: Graph) -> list:
    """Cut vertices, by iterative lowpoint DFS."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(G.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cut[parent] = True
        if root_children > 1:
            cut[root] = True
    return [v for v in range(n) if cut[v]]


def is_biconnected(G: Graph) -> bool:
    return G.n >= 3 and G.is_connected() and not articulation_points(G)


# -- surgeries -------------------------------------------------------------


def identify_vertices(G: Graph, u: int, v: int) -> Graph:
    """Merge non-adjacent ``u`` and ``v``.

    The merged vertex keeps id ``min(u, v)``; ids above ``max(u, v)`` shift
    down by one.  Parallel edges collapse.
    """
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        raise SameVertex(f"cannot identify vertex {u} with itself")
    if G.has_edge(u, v):
        raise WouldCreateLoop(f"{u} and {v} are adjacent")
    keep, drop = min(u, v), max(u, v)

    def new_id(x):
        if x == drop:
            return keep
        return x - 1 if x > drop else x

    return Graph(G.n - 1, [(new_id(a), new_id(b)) for a, b in G.edges])


def subdivide_all_edges(G: Graph, k: int) -> Graph:
    """Replace every edge by a path with ``k`` new internal vertices.

    Original vertices keep their ids; the internal vertices of the i-th edge
    (in sorted edge order) are ``n + i*k .. n + i*k + k - 1`` listed from the
    smaller endpoint towards the larger one.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return G
    n = G.n
    edges = []
    for i, (a, b) in enumerate(G.edges):
        chain = [a] + [n + i * k + j for j in range(k)] + [b]
        edges.extend(zip(chain, chain[1:]))
    return Graph(n + k * G.e, edges)


# -- edge-list text format -------------------------------------------------


def read_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((line, offset))
        offset += len(raw.encode())
    if not rows:
        raise ParseError("empty edge list", 0)
    header, off = rows[0]
    try:
        n, m = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(f"bad header {header!r}, expected 'n m'", off) from None
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", off)
    edges = []
    for line, off in body:
        try:
            u, v = (int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"bad edge line {line!r}", off) from None
        edges.append((u, v))
    return Graph(n, edges)


def write_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.e}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"

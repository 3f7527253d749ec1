"""Homomorphisms into odd cycles ``C_{2t+1}``.

A graph has circular chromatic number at most ``2 + 1/t`` exactly when it
maps to ``C_{2t+1}``; with ``t = 2`` this is circular 5/2-coloring.

Colors are ``0..2t`` and color ``c`` is adjacent to ``c +- 1 (mod 2t+1)``.
Domains are bitmasks; search keeps every edge arc-consistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

from .errors import InvalidPin, InvalidVertex
from .graph import INFINITE, Graph


@dataclass(frozen=True)
class HomAssignment:
    target_t: int
    colors: tuple

    @property
    def modulus(self) -> int:
        return 2 * self.target_t + 1

    def is_valid_for(self, G: Graph) -> bool:
        return is_homomorphism(G, self.colors, self.target_t)

    def __getitem__(self, v):
        return self.colors[v]


def cycle_adjacent(a: int, b: int, t: int = 2) -> bool:
    m = 2 * t + 1
    return (a - b) % m in (1, m - 1)


def is_homomorphism(G: Graph, colors, t: int = 2) -> bool:
    m = 2 * t + 1
    if len(colors) != G.n or any(not 0 <= c < m for c in colors):
        return False
    return all(cycle_adjacent(colors[u], colors[v], t) for u, v in G.edges)


@lru_cache(maxsize=None)
def _support_table(m: int) -> tuple:
    full = (1 << m) - 1
    table = []
    for d in range(1 << m):
        up = ((d << 1) | (d >> (m - 1))) & full
        down = (d >> 1) | ((d & 1) << (m - 1))
        table.append(up | down)
    return tuple(table)


def _support_fn(m: int):
    if m <= 16:
        return _support_table(m).__getitem__
    full = (1 << m) - 1

    def support(d):
        return (((d << 1) | (d >> (m - 1))) & full) | (d >> 1) | ((d & 1) << (m - 1))

    return support


def _check_pins(G: Graph, t: int, pins) -> dict:
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    pins = dict(pins or {})
    m = 2 * t + 1
    for v, c in pins.items():
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise InvalidPin(f"pinned vertex {v!r} not in graph")
        if not (isinstance(c, int) and 0 <= c < m):
            raise InvalidPin(f"pinned color {c!r} not in 0..{m - 1}")
    return pins


def search_order(G: Graph, component, first=None) -> list:
    """Connected elimination order that greedily maximizes back-degree."""
    comp = set(component)
    if first is None:
        first = min(comp, key=lambda v: (-G.degree(v), v))
    order = [first]
    placed = {first}
    back = {v: 0 for v in comp}
    for w in G.neighbors(first):
        back[w] += 1
    while len(order) < len(comp):
        v = min(
            (x for x in comp if x not in placed),
            key=lambda x: (-back[x], -G.degree(x), x),
        )
        order.append(v)
        placed.add(v)
        for w in G.neighbors(v):
            if w in back:
                back[w] += 1
    return order


class _Solver:
    def __init__(self, G: Graph, t: int):
        self.G = G
        self.m = 2 * t + 1
        self.full = (1 << self.m) - 1
        self.support = _support_fn(self.m)
        self.adj = [G.neighbors(v) for v in G.vertices()]

    def propagate(self, dom, queue) -> bool:
        support, adj = self.support, self.adj
        queue = list(queue)
        while queue:
            x = queue.pop()
            sx = support(dom[x])
            for y in adj[x]:
                dy = dom[y]
                nd = dy & sx
                if nd != dy:
                    if not nd:
                        return False
                    dom[y] = nd
                    queue.append(y)
        return True

    def first(self, order, dom):
        """Depth-first search for one solution, colors in ascending order."""
        propagate = self.propagate
        k = len(order)

        def rec(i, dom):
            if i == k:
                return dom
            v = order[i]
            d = dom[v]
            while d:
                low = d & -d
                d ^= low
                nd = dom.copy()
                nd[v] = low
                if propagate(nd, (v,)):
                    res = rec(i + 1, nd)
                    if res is not None:
                        return res
            return None

        return rec(0, dom)

    def count(self, order, dom) -> int:
        propagate = self.propagate
        k = len(order)

        def rec(i, dom):
            if i == k:
                return 1
            v = order[i]
            d = dom[v]
            if d & (d - 1) == 0:
                return rec(i + 1, dom)
            total = 0
            while d:
                low = d & -d
                d ^= low
                nd = dom.copy()
                nd[v] = low
                if propagate(nd, (v,)):
                    total += rec(i + 1, nd)
            return total

        return rec(0, dom)


def _component_pins(comp, pins):
    return [v for v in comp if v in pins]


def find_hom(G: Graph, t: int = 2, pins: Optional[Mapping[int, int]] = None) -> Optional[HomAssignment]:
    """A homomorphism ``G -> C_{2t+1}`` extending ``pins``, or ``None``.

    Deterministic for fixed input.  Components are solved independently;
    an unpinned component has its first vertex fixed to color 0 and that
    vertex's first neighbor in search order restricted to color 1 (the
    dihedral symmetry of the target makes this lossless).
    """
    pins = _check_pins(G, t, pins)
    solver = _Solver(G, t)
    dom = [solver.full] * G.n
    for v, c in pins.items():
        dom[v] = 1 << c
    if not solver.propagate(dom, list(pins)):
        return None
    colors = [0] * G.n
    for comp in G.components():
        pinned = _component_pins(comp, pins)
        if pinned:
            start = min(pinned, key=lambda v: (-G.degree(v), v))
            order = search_order(G, comp, start)
            cdom = dom
        else:
            order = search_order(G, comp)
            cdom = dom.copy()
            v0 = order[0]
            cdom[v0] = 1
            nbrs = set(G.neighbors(v0))
            w = next((x for x in order if x in nbrs), None)
            if w is not None:
                cdom[w] &= 0b10
            if not solver.propagate(cdom, [v0] + ([w] if w is not None else [])):
                return None
        sol = solver.first(order, cdom)
        if sol is None:
            return None
        for v in comp:
            colors[v] = sol[v].bit_length() - 1
    return HomAssignment(t, tuple(colors))


def has_hom(G: Graph, t: int = 2, pins: Optional[Mapping[int, int]] = None) -> bool:
    return find_hom(G, t, pins) is not None


def count_homs(G: Graph, t: int = 2, pins: Optional[Mapping[int, int]] = None) -> int:
    """Exact number of homomorphisms ``G -> C_{2t+1}`` extending ``pins``."""
    pins = _check_pins(G, t, pins)
    solver = _Solver(G, t)
    dom = [solver.full] * G.n
    for v, c in pins.items():
        dom[v] = 1 << c
    if not solver.propagate(dom, list(pins)):
        return 0
    total = 1
    for comp in G.components():
        pinned = _component_pins(comp, pins)
        start = min(pinned, key=lambda v: (-G.degree(v), v)) if pinned else None
        order = search_order(G, comp, start)
        total *= solver.count(order, dom)
        if not total:
            return 0
    return total


def plausible_pair(G: Graph, v1: int, v2: int, c1: int, c2: int) -> bool:
    """Whether colors ``(c1, c2)`` on ``(v1, v2)`` pass the distance test for ``C_5``.

    Distance 0 needs equal colors, 1 adjacent colors, 2 non-adjacent colors,
    3 distinct colors; distance 4 or more (or different components) always
    passes.
    """
    for v in (v1, v2):
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise InvalidVertex(f"vertex {v!r} not in graph")
    for c in (c1, c2):
        if not (isinstance(c, int) and 0 <= c < 5):
            raise InvalidPin(f"color {c!r} not in 0..4")
    d = G.distance(v1, v2)
    if d == 0:
        return c1 == c2
    if d == 1:
        return cycle_adjacent(c1, c2)
    if d == 2:
        return not cycle_adjacent(c1, c2)
    if d == 3:
        return c1 != c2
    assert d >= 4 or d == INFINITE
    return True

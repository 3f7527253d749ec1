"""Strings, cells and the structural audit.

A *string* is a path whose internal vertices have degree two and whose ends
have degree at least three; a *k-string* has ``k + 1`` edges (an edge between
two branch vertices is a 0-string).  Degree-one vertices are accepted as
string ends so that the decomposition is defined on every graph, but the
result is flagged ``degenerate``.  Components that are bare cycles carry no
strings and are listed separately.

A *cell* is any 5-cycle.  Its degree counts the strings that meet it without
lying inside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import NoSignature, NotACycle
from .graph import Graph, cycle_report, cycles_up_to


@dataclass(frozen=True)
class GraphString:
    ends: tuple
    internal: tuple

    @property
    def k(self) -> int:
        return len(self.internal)

    @property
    def path(self) -> tuple:
        return (self.ends[0],) + self.internal + (self.ends[1],)

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.path)

    @property
    def edge_set(self) -> frozenset:
        p = self.path
        return frozenset(frozenset(e) for e in zip(p, p[1:]))

    @property
    def is_closed(self) -> bool:
        return self.ends[0] == self.ends[1]


@dataclass
class StringDecomposition:
    strings: list
    cycle_components: list
    degenerate: bool = False
    # frozenset({u, v}) -> index into ``strings``
    edge_index: dict = field(default_factory=dict, repr=False)

    def string_of_edge(self, u: int, v: int) -> Optional[GraphString]:
        i = self.edge_index.get(frozenset((u, v)))
        return None if i is None else self.strings[i]

    def params_at(self, G: Graph, v: int) -> list:
        """String parameter of each edge at ``v`` (one entry per incident edge)."""
        out = []
        for w in G.neighbors(v):
            s = self.string_of_edge(v, w)
            if s is not None:
                out.append(s.k)
        return out

    def friends(self, G: Graph, v: int) -> list:
        """Opposite ends of the strings leaving ``v``, one per incident edge."""
        out = []
        for w in G.neighbors(v):
            s = self.string_of_edge(v, w)
            if s is None:
                continue
            a, b = s.ends
            out.append(b if a == v else a)
        return out


def string_decomposition(G: Graph) -> StringDecomposition:
    deg = G.degrees()
    ends = [v for v in G.vertices() if deg[v] >= 1 and deg[v] != 2]
    seen_internal = set()
    strings = []
    keys = set()
    for u in ends:
        for w in G.neighbors(u):
            prev, cur, internal = u, w, []
            while deg[cur] == 2:
                internal.append(cur)
                a, b = G.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            seq = (u, *internal, cur)
            if seq > seq[::-1]:
                continue
            if seq in keys:
                continue
            keys.add(seq)
            seen_internal.update(internal)
            strings.append(GraphString((u, cur), tuple(internal)))
    strings.sort(key=lambda s: (min(s.ends), max(s.ends), s.internal))

    cycles = []
    for v in G.vertices():
        if deg[v] == 2 and v not in seen_internal:
            cyc = [v]
            seen_internal.add(v)
            prev, cur = v, min(G.neighbors(v))
            while cur != v:
                cyc.append(cur)
                seen_internal.add(cur)
                a, b = G.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            cycles.append(tuple(cyc))

    index = {}
    for i, s in enumerate(strings):
        for e in s.edge_set:
            index[e] = i
    return StringDecomposition(
        strings=strings,
        cycle_components=cycles,
        degenerate=any(d == 1 for d in deg),
        edge_index=index,
    )


def vertex_signature(G: Graph, v: int, decomposition: Optional[StringDecomposition] = None):
    """``(k_1 >= ... >= k_d)`` and its sum for a vertex of degree ``d >= 3``."""
    G.check_vertex(v)
    if G.degree(v) < 3:
        raise NoSignature(f"vertex {v} has degree {G.degree(v)} < 3")
    sd = decomposition or string_decomposition(G)
    sig = tuple(sorted(sd.params_at(G, v), reverse=True))
    return sig, sum(sig)


# -- cells -------------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    cycle: tuple
    degree: int
    signature: tuple
    weight: int
    is_induced: bool
    # indices (into the decomposition) of the strings counted by ``degree``
    strings: tuple = ()

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self.cycle))

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.cycle)


def _cycle_edges(cycle: Sequence[int]) -> frozenset:
    return frozenset(frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle)))


def find_cells(G: Graph, decomposition: Optional[StringDecomposition] = None) -> list:
    """All 5-cycles with degree, signature and weight.

    Sorted by vertex tuple; for triangle-free graphs a vertex set carries at
    most one 5-cycle.
    """
    sd = decomposition or string_decomposition(G)
    cells = []
    for cyc in cycles_up_to(G, 5, parity=1):
        if len(cyc) != 5:
            continue
        kset = frozenset(cyc)
        kedges = _cycle_edges(cyc)
        counted = [
            i for i, s in enumerate(sd.strings)
            if not s.edge_set <= kedges and s.vertices & kset
        ]
        sig = tuple(sorted((sd.strings[i].k for i in counted), reverse=True))
        chords = any(G.has_edge(a, b) and frozenset((a, b)) not in kedges
                     for a in cyc for b in cyc if a < b)
        cells.append(Cell(cyc, len(counted), sig, sum(sig), not chords, tuple(counted)))
    cells.sort(key=lambda c: (c.vertices, c.cycle))
    return cells


def overlapping_cells(cells: Sequence[Cell]) -> list:
    """Index pairs of cells sharing at least one vertex."""
    return [
        (i, j)
        for i in range(len(cells))
        for j in range(i + 1, len(cells))
        if cells[i].vertex_set & cells[j].vertex_set
    ]


def find_bad_paths(G: Graph, K: Sequence[int]) -> list:
    """Paths ``a x y b`` of length three meeting the cycle ``K`` only at ``a, b``."""
    K = tuple(K)
    k = len(K)
    if k < 3 or len(set(K)) != k:
        raise NotACycle(f"{K} is not a cycle")
    for v in K:
        G.check_vertex(v)
    for i in range(k):
        if not G.has_edge(K[i], K[(i + 1) % k]):
            raise NotACycle(f"{K[i]}-{K[(i + 1) % k]} is not an edge")
    on = set(K)
    paths = set()
    for a in sorted(on):
        for x in G.neighbors(a):
            if x in on:
                continue
            for y in G.neighbors(x):
                if y in on:
                    continue
                for b in G.neighbors(y):
                    if b in on and b != a:
                        paths.add(min((a, x, y, b), (b, y, x, a)))
    return sorted(paths)


# -- audit -------------------------------------------------------------------


@dataclass
class Check:
    holds: bool
    witnesses: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"holds": self.holds, "witnesses": [_jsonable(w) for w in self.witnesses]}


def _jsonable(x):
    if isinstance(x, (tuple, list, frozenset, set)):
        items = sorted(x) if isinstance(x, (frozenset, set)) else x
        return [_jsonable(i) for i in items]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class AuditReport:
    checks: dict

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks.values())

    @property
    def violations(self) -> list:
        return [name for name, c in self.checks.items() if not c.holds]

    def __getitem__(self, name) -> Check:
        return self.checks[name]

    def as_dict(self) -> dict:
        return {name: c.as_dict() for name, c in self.checks.items()}


AUDIT_CHECKS = (
    "girth_at_least_5",
    "min_degree_at_least_2",
    "no_long_strings",
    "no_6_cycles",
    "no_short_even_cycles",
    "cells_vertex_disjoint",
    "no_cell_of_degree_at_most_3",
    "no_22k_vertex",
    "degree3_outside_cells_light",
    "degree4_outside_cells_weight_at_most_6",
    "cell_2kkk_has_zero_string",
)


def _check(bad) -> Check:
    return Check(not bad, list(bad))


def audit_structure(G: Graph) -> AuditReport:
    """Evaluate each structural conclusion about minimal counterexamples on ``G``.

    Every predicate is taken literally on the input; violations are normal on
    arbitrary graphs and are reported with witnesses.
    """
    report = cycle_report(G, 8)
    sd = string_decomposition(G)
    cells = find_cells(G, sd)
    in_cell = set().union(*(c.vertex_set for c in cells)) if cells else set()
    deg = G.degrees()

    sigs = {v: tuple(sorted(sd.params_at(G, v), reverse=True)) for v in G.vertices() if deg[v] >= 3}

    checks = {}
    checks["girth_at_least_5"] = _check(
        [report.witness_cycle] if report.girth < 5 else []
    )
    checks["min_degree_at_least_2"] = _check([v for v in G.vertices() if deg[v] < 2])
    checks["no_long_strings"] = _check([s.path for s in sd.strings if s.k >= 3])
    checks["no_6_cycles"] = _check([c for c in report.even_cycles if len(c) == 6])
    checks["no_short_even_cycles"] = _check(list(report.even_cycles))
    checks["cells_vertex_disjoint"] = _check(
        [(cells[i].cycle, cells[j].cycle) for i, j in overlapping_cells(cells)]
    )
    checks["no_cell_of_degree_at_most_3"] = _check(
        [{"cell": c.cycle, "degree": c.degree} for c in cells if c.degree <= 3]
    )
    # a (2,2,k)-vertex: degree three with at least two incident 2-strings
    checks["no_22k_vertex"] = _check(
        [{"vertex": v, "signature": s} for v, s in sigs.items() if len(s) == 3 and s.count(2) >= 2]
    )
    checks["degree3_outside_cells_light"] = _check([
        {"vertex": v, "signature": s}
        for v, s in sigs.items()
        if len(s) == 3 and v not in in_cell and (sum(s) > 3 or (sum(s) == 3 and s != (1, 1, 1)))
    ])
    checks["degree4_outside_cells_weight_at_most_6"] = _check([
        {"vertex": v, "signature": s}
        for v, s in sigs.items()
        if len(s) == 4 and v not in in_cell and sum(s) > 6
    ])
    checks["cell_2kkk_has_zero_string"] = _check([
        {"cell": c.cycle, "signature": c.signature}
        for c in cells
        if c.degree == 4 and len(c.signature) == 4 and c.signature[0] == 2 and c.signature[3] != 0
    ])
    return AuditReport(checks)

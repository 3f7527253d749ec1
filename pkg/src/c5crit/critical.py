"""Criticality for circular ``(2 + 1/t)``-coloring.

A graph is critical when it has no homomorphism to ``C_{2t+1}`` while every
proper subgraph has one.  Colorability is monotone under subgraphs, so it is
enough to look at single-edge deletions and at isolated vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotApplicable, NotCritical
from .graph import Graph, potential
from .hom import HomAssignment, find_hom, has_hom

CRITICAL = "CRITICAL"


@dataclass(frozen=True)
class CriticalityVerdict:
    is_colorable: bool
    is_critical: bool
    # HomAssignment when colorable, an edge (u, v) with G - uv still
    # non-colorable, an isolated vertex id, or CRITICAL
    witness: Union[HomAssignment, tuple, int, str]

    @property
    def removable_edge(self) -> Optional[tuple]:
        return self.witness if isinstance(self.witness, tuple) else None


def _deletion_colorable(args):
    G, t, edge = args
    return has_hom(G.delete_edge(*edge), t)


def _scan_deletions(G: Graph, t: int, workers: int):
    """First edge (ascending) whose deletion leaves ``G`` non-colorable."""
    if workers > 1 and G.e > 8:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_deletion_colorable, [(G, t, e) for e in G.edges]))
        for edge, ok in zip(G.edges, results):
            if not ok:
                return edge
        return None
    for edge in G.edges:
        if not has_hom(G.delete_edge(*edge), t):
            return edge
    return None


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("C5CRIT_THREADS", "1")))
    except ValueError:
        return 1


def is_critical(G: Graph, t: int = 2, workers: Optional[int] = None) -> CriticalityVerdict:
    hom = find_hom(G, t)
    if hom is not None:
        return CriticalityVerdict(True, False, hom)
    isolated = [v for v in G.vertices() if G.degree(v) == 0]
    if isolated:
        return CriticalityVerdict(False, False, isolated[0])
    edge = _scan_deletions(G, t, workers or _workers())
    if edge is not None:
        return CriticalityVerdict(False, False, edge)
    return CriticalityVerdict(False, True, CRITICAL)


def extract_critical_subgraph(G: Graph, t: int = 2) -> Graph:
    """Deterministically shrink a non-colorable graph to a critical subgraph.

    Edges are tried in ascending order and the scan restarts after every
    successful deletion; isolated vertices are dropped at the end (the
    remaining vertices keep their relative order).
    """
    if has_hom(G, t):
        raise NotApplicable("graph is colorable; it has no critical subgraph")
    # An edge kept once stays necessary in every later subgraph, so a single
    # ascending pass gives the same result as restarting after each deletion.
    H = G
    for edge in G.edges:
        smaller = H.delete_edge(*edge)
        if not has_hom(smaller, t):
            H = smaller
    return H.without_isolated()


@dataclass(frozen=True)
class TheoremReport:
    potential: int
    is_exception: bool
    exception_name: Optional[str]
    satisfies_thm_main: bool
    conj_value: int
    satisfies_conj_bound: bool

    def as_dict(self) -> dict:
        return {
            "potential": self.potential,
            "is_exception": self.is_exception,
            "exception_name": self.exception_name,
            "satisfies_thm_main": self.satisfies_thm_main,
            "conj_value": self.conj_value,
            "satisfies_conj_bound": self.satisfies_conj_bound,
        }


_EXCEPTIONS = None


def exception_codes() -> dict:
    """Canonical codes of the exceptional critical graphs C3, E1 and E2."""
    global _EXCEPTIONS
    if _EXCEPTIONS is None:
        from .constructions import make_named
        from .enumeration.canon import canonical_code

        _EXCEPTIONS = {
            canonical_code(make_named(name)): label
            for name, label in (("cycle(3)", "C3"), ("e1", "E1"), ("e2", "E2"))
        }
    return _EXCEPTIONS


def exception_name(G: Graph) -> Optional[str]:
    if G.n not in (3, 10):
        return None
    from .enumeration.canon import canonical_code

    return exception_codes().get(canonical_code(G))


def theorem_predicate(G: Graph, check: bool = True) -> TheoremReport:
    """Evaluate the potential bound for a 5/2-critical graph.

    ``satisfies_thm_main`` holds when ``p(G) <= 1`` or ``G`` is one of the
    exceptions C3, E1, E2.  ``conj_value`` is ``14 n - 11 e``, reported for
    information together with whether it is at most 9.
    """
    if check and not is_critical(G, 2).is_critical:
        raise NotCritical("graph is not 5/2-critical")
    p = potential(G)
    name = exception_name(G)
    conj = 14 * G.n - 11 * G.e
    return TheoremReport(
        potential=p,
        is_exception=name is not None,
        exception_name=name,
        satisfies_thm_main=p <= 1 or name is not None,
        conj_value=conj,
        satisfies_conj_bound=conj <= 9,
    )

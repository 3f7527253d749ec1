"""Search for small 5/2-critical graphs with potential exactly 2.

A critical graph with ``p(G) = 2`` has ``e = (5n - 2) / 4`` edges, so only
``n`` with ``5n - 2`` divisible by four qualify.  For each requested ``n`` the
candidates are the biconnected graphs of girth at least five with that edge
count; each one is tested for criticality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..critical import exception_name, is_critical
from ..formats import graph6_encode
from .canon import canonical_code
from .generate import EnumerationTask, enumerate_graphs

# expected exceptional graphs per order; other orders are expected empty
EXPECTED = {6: (), 10: ("E1", "E2"), 14: (), 18: ()}


def edge_count_for(n: int) -> int:
    if (5 * n - 2) % 4:
        raise ValueError(f"5n-2 is not divisible by 4 for n={n}")
    return (5 * n - 2) // 4


@dataclass
class OrderResult:
    n: int
    e: int
    candidates: int = 0
    critical: list = field(default_factory=list)  # dicts: graph6, code, name
    complete: bool = False
    elapsed: float = 0.0
    checkpoint: Optional[dict] = None

    @property
    def expected(self) -> tuple:
        return EXPECTED.get(self.n, ())

    @property
    def found_names(self) -> tuple:
        return tuple(sorted(str(c["name"]) for c in self.critical))

    @property
    def matches(self) -> Optional[bool]:
        """``None`` while the search is incomplete."""
        if not self.complete:
            return None
        return self.found_names == tuple(sorted(self.expected))

    def as_dict(self, include_checkpoint: bool = False) -> dict:
        d = {
            "n": self.n,
            "e": self.e,
            "candidates": self.candidates,
            "critical": self.critical,
            "expected": list(self.expected),
            "complete": self.complete,
            "matches": self.matches,
        }
        if include_checkpoint and self.checkpoint is not None:
            d["checkpoint"] = self.checkpoint
        return d


@dataclass
class SmallCriticalReport:
    orders: list

    @property
    def complete(self) -> bool:
        return all(o.complete for o in self.orders)

    @property
    def all_match(self) -> bool:
        return all(o.matches for o in self.orders)

    def as_dict(self) -> dict:
        return {
            "complete": self.complete,
            "all_match": self.all_match if self.complete else None,
            "orders": [o.as_dict() for o in self.orders],
        }


def verify_small_critical(n_values: Sequence[int], budget: Optional[float] = None,
                          checkpoints: Optional[dict] = None,
                          workers: int = 0) -> SmallCriticalReport:
    """Enumerate candidates for each ``n`` and collect the critical ones.

    ``budget`` is a wall-clock limit in seconds shared by all orders; when it
    runs out the remaining orders are reported incomplete, each with a
    checkpoint to resume from (``checkpoints`` maps ``n`` to one).
    """
    t0 = time.monotonic()
    checkpoints = checkpoints or {}
    out = []
    for n in n_values:
        e = edge_count_for(n)
        res = OrderResult(n, e)
        out.append(res)
        remaining = None if budget is None else max(0.0, budget - (time.monotonic() - t0))
        task = EnumerationTask(n=n, e=e, min_girth=5, require_biconnected=True,
                               budget=remaining, checkpoint=checkpoints.get(n),
                               workers=workers)
        t1 = time.monotonic()
        run = enumerate_graphs(task)
        res.candidates = len(run.graphs)
        res.complete = run.complete
        res.checkpoint = run.checkpoint
        for G in run.graphs:
            if is_critical(G, 2).is_critical:
                res.critical.append({
                    "graph6": graph6_encode(G),
                    "code": canonical_code(G).decode("ascii"),
                    "name": exception_name(G),
                })
        res.elapsed = time.monotonic() - t1
    return SmallCriticalReport(out)

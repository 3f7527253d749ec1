"""Isomorph-free generation by canonical vertex augmentation.

A graph on ``k + 1`` vertices is accepted from its parent on ``k`` vertices
only when the added vertex is a canonical deletion: it has the smallest
``(degree, sorted neighbor degrees)`` key among deletable vertices, and
either it is the unique such vertex or deleting the canonically chosen one
gives a graph isomorphic to the parent.  Siblings are deduplicated by
canonical code.  In connected mode (used for biconnected targets) only
non-cut vertices are deletable, so every intermediate graph is connected.

Work is split into independent subtasks at a fixed depth; subtasks run in
order (optionally in a process pool) and a checkpoint records how many are
done.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from ..formats import graph6_decode, graph6_encode_masks
from ..graph import Graph, articulation_points, is_biconnected
from .canon import canonical_labeling

CHECKPOINT_FORMAT = "c5crit-enumeration-checkpoint"
CHECKPOINT_VERSION = 1


@dataclass
class EnumerationTask:
    n: int
    e: Optional[int] = None
    min_girth: int = 0
    require_biconnected: bool = False
    require_connected: bool = False
    max_degree: Optional[int] = None
    budget: Optional[float] = None
    checkpoint: Optional[dict] = None
    split_depth: Optional[int] = None
    workers: int = 0

    def constraints(self) -> dict:
        return {
            "n": self.n,
            "e": self.e,
            "min_girth": self.min_girth,
            "require_biconnected": self.require_biconnected,
            "require_connected": self.require_connected,
            "max_degree": self.max_degree,
            "split_depth": self.resolved_split_depth(),
        }

    @property
    def connected_mode(self) -> bool:
        return self.require_biconnected or self.require_connected

    def resolved_split_depth(self) -> int:
        if self.split_depth is not None:
            return max(1, min(self.split_depth, max(self.n, 1)))
        return max(1, min(self.n, self.n // 2 + 1))


@dataclass
class EnumerationResult:
    graphs: list
    complete: bool
    checkpoint: dict
    subtasks_done: int = 0
    subtasks_total: int = 0
    elapsed: float = 0.0


class _Node:
    __slots__ = ("masks", "ecount", "code")

    def __init__(self, masks, ecount, code):
        self.masks = masks
        self.ecount = ecount
        self.code = code


def _code_of(masks) -> bytes:
    return graph6_encode_masks(canonical_labeling(masks)[1])


def _distances(masks):
    """All-pairs BFS distances (``None`` when unreachable)."""
    k = len(masks)
    out = []
    for s in range(k):
        dist = [None] * k
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= masks[low.bit_length() - 1]
                m ^= low
            nxt &= ~seen
            seen |= nxt
            m = nxt
            while m:
                low = m & -m
                dist[low.bit_length() - 1] = d
                m ^= low
            frontier = nxt
        out.append(dist)
    return out


def _cut_vertices(masks) -> set:
    return set(articulation_points(Graph.from_masks(masks)))


class _Generator:
    def __init__(self, task: EnumerationTask):
        self.task = task
        self.n = task.n
        self.e = task.e
        self.g = task.min_girth
        self.connected = task.connected_mode
        self.biconnected = task.require_biconnected
        self.maxdeg = task.max_degree

    # -- pruning -------------------------------------------------------

    def feasible(self, masks, ecount) -> bool:
        """Necessary conditions for extending to a valid final graph."""
        k = len(masks)
        r = self.n - k
        if self.e is None:
            if r == 0 and self.biconnected:
                return all(m.bit_count() >= 2 for m in masks)
            return True
        f = self.e - ecount
        if f < 0:
            return False
        if self.biconnected:
            deficit = sum(max(0, 2 - m.bit_count()) for m in masks)
            if r == 0:
                return deficit == 0 and f == 0
            if f < max(deficit, r + (deficit + 1) // 2):
                return False
        elif self.connected and f < r:
            return False
        if r == 0:
            return f == 0
        if f > r * k + r * (r - 1) // 2:
            return False
        return True

    def neighbor_sets(self, masks, ecount) -> Iterator[int]:
        """Candidate neighborhoods of the next vertex, as bitmasks."""
        k = len(masks)
        r_after = self.n - k - 1
        hi = k
        if self.maxdeg is not None:
            hi = min(hi, self.maxdeg)
        if self.e is not None:
            reserve = r_after if self.connected else 0
            hi = min(hi, self.e - ecount - reserve)
        lo = 1 if self.connected and k > 0 else 0
        if self.e is not None and r_after == 0:
            lo = max(lo, self.e - ecount)
        if hi < lo:
            return
        allowed = [v for v in range(k)
                   if self.maxdeg is None or masks[v].bit_count() < self.maxdeg]
        need = self.g - 2  # pairwise distance needed inside the neighborhood
        if need >= 1:
            dist = _distances(masks)
            compat = [0] * k
            for a in allowed:
                row = dist[a]
                m = 0
                for b in allowed:
                    if b != a and (row[b] is None or row[b] >= need):
                        m |= 1 << b
                compat[a] = m
        else:
            full = 0
            for v in allowed:
                full |= 1 << v
            compat = [full & ~(1 << v) for v in range(k)]

        out = []

        def rec(start_idx, chosen, pool, size):
            if size >= lo:
                out.append(chosen)
            if size == hi:
                return
            for idx in range(start_idx, len(allowed)):
                v = allowed[idx]
                if pool >> v & 1:
                    rec(idx + 1, chosen | (1 << v), pool & compat[v], size + 1)

        pool = 0
        for v in allowed:
            pool |= 1 << v
        rec(0, 0, pool, 0)
        out.sort(key=lambda m: (m.bit_count(), m))
        yield from out

    # -- canonical deletion ---------------------------------------------

    def children(self, node: _Node) -> list:
        masks = node.masks
        k = len(masks)
        seen = set()
        kids = []
        for s in self.neighbor_sets(masks, node.ecount):
            new = list(masks)
            m = s
            while m:
                low = m & -m
                new[low.bit_length() - 1] |= 1 << k
                m ^= low
            new.append(s)
            ecount = node.ecount + s.bit_count()
            if not self.feasible(new, ecount):
                continue
            accepted, code = self.accept(new, node.code)
            if not accepted or code in seen:
                continue
            seen.add(code)
            kids.append(_Node(tuple(new), ecount, code))
        return kids

    def accept(self, masks, parent_code):
        v = len(masks) - 1
        deletable = range(len(masks))
        if self.connected and len(masks) > 2:
            cut = _cut_vertices(masks)
            deletable = [x for x in deletable if x not in cut]
            if v in cut:
                return False, None
        degs = [m.bit_count() for m in masks]

        def key(x):
            m = masks[x]
            nd = []
            while m:
                low = m & -m
                nd.append(degs[low.bit_length() - 1])
                m ^= low
            return degs[x], tuple(sorted(nd))

        keys = {x: key(x) for x in deletable}
        best = min(keys.values())
        if keys[v] != best:
            return False, None
        cands = [x for x in deletable if keys[x] == best]
        lab, cert = canonical_labeling(masks)
        code = graph6_encode_masks(cert)
        if len(cands) == 1:
            return True, code
        pos = {x: i for i, x in enumerate(lab)}
        w = max(cands, key=pos.__getitem__)
        if w == v:
            return True, code
        rest = Graph.from_masks(masks).delete_vertices([w])
        return _code_of(rest.masks) == parent_code, code

    # -- traversal --------------------------------------------------------

    def emit_ok(self, node: _Node) -> bool:
        if self.e is not None and node.ecount != self.e:
            return False
        if self.biconnected:
            return is_biconnected(Graph.from_masks(node.masks))
        if self.connected:
            return Graph.from_masks(node.masks).is_connected()
        return True

    def root(self) -> _Node:
        return _Node((0,), 0, _code_of((0,)))

    def expand(self, node: _Node) -> Iterator[_Node]:
        """Depth-first: every accepted final graph below ``node``."""
        if len(node.masks) == self.n:
            if self.emit_ok(node):
                yield node
            return
        for child in self.children(node):
            yield from self.expand(child)

    def frontier(self, depth: int) -> list:
        """Nodes with ``depth`` vertices in depth-first order."""
        level = [self.root()]
        while level and len(level[0].masks) < depth:
            nxt = []
            for node in level:
                nxt.extend(self.children(node))
            level = nxt
        return level


def _run_subtask(args) -> list:
    constraints, g6 = args
    task = EnumerationTask(**{k: v for k, v in constraints.items()})
    gen = _Generator(task)
    G = graph6_decode(g6)
    node = _Node(G.masks, G.e, _code_of(G.masks))
    return [(graph6_encode_masks(x.masks).decode("ascii"), x.code) for x in gen.expand(node)]


class _UniqueCheck:
    """Raise if two emitted graphs share a canonical code."""

    def __init__(self):
        self.seen = set()

    def __call__(self, res):
        for g6, code in res:
            if code in self.seen:
                raise AssertionError(f"duplicate isomorphism class emitted: {g6}")
            self.seen.add(code)
        return [g6 for g6, _ in res]


def _workers(task: EnumerationTask) -> int:
    if task.workers:
        return task.workers
    try:
        return max(1, int(os.environ.get("C5CRIT_THREADS", "1")))
    except ValueError:
        return 1


def _new_checkpoint(task: EnumerationTask) -> dict:
    gen = _Generator(task)
    depth = task.resolved_split_depth()
    frontier = gen.frontier(depth) if task.n >= 1 else []
    return {
        "format": CHECKPOINT_FORMAT,
        "version": CHECKPOINT_VERSION,
        "task": task.constraints(),
        "subtasks": [graph6_encode_masks(x.masks).decode("ascii") for x in frontier],
        "next": 0,
        "emitted": 0,
    }


def _validate_checkpoint(task: EnumerationTask, ckpt: dict) -> dict:
    if ckpt.get("format") != CHECKPOINT_FORMAT:
        raise ValueError("not an enumeration checkpoint")
    if ckpt.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {ckpt.get('version')}")
    if ckpt.get("task") != task.constraints():
        raise ValueError("checkpoint was written for different constraints")
    return dict(ckpt)


def _iter_subtask_results(task, ckpt):
    """Yield ``(index, graph6 list)`` for subtasks from ``ckpt['next']`` on."""
    constraints = task.constraints()
    start = ckpt["next"]
    todo = ckpt["subtasks"][start:]
    workers = _workers(task)
    args = [(constraints, g6) for g6 in todo]
    if workers > 1 and len(args) > 1:
        from multiprocessing import get_context

        with get_context("spawn").Pool(workers) as pool:
            for i, res in enumerate(pool.imap(_run_subtask, args)):
                yield start + i, res
    else:
        for i, a in enumerate(args):
            yield start + i, _run_subtask(a)


def _small_case(task: EnumerationTask) -> list:
    if task.n == 0:
        ok = task.e in (None, 0) and not task.require_biconnected
        return [Graph(0)] if ok else []
    return None


def enumerate_graphs(task: EnumerationTask) -> EnumerationResult:
    """Run (or resume) an enumeration, stopping between subtasks on budget."""
    t0 = time.monotonic()
    small = _small_case(task)
    if small is not None:
        return EnumerationResult(small, True, {}, 0, 0, 0.0)
    ckpt = _validate_checkpoint(task, task.checkpoint) if task.checkpoint else _new_checkpoint(task)
    graphs = []
    total = len(ckpt["subtasks"])
    done = ckpt["next"]
    complete = done >= total
    if not complete:
        unique = _UniqueCheck()
        for idx, res in _iter_subtask_results(task, ckpt):
            res = unique(res)
            graphs.extend(graph6_decode(g) for g in res)
            done = idx + 1
            ckpt["next"] = done
            ckpt["emitted"] += len(res)
            if task.budget is not None and time.monotonic() - t0 > task.budget and done < total:
                break
        complete = done >= total
    return EnumerationResult(graphs, complete, ckpt, done, total, time.monotonic() - t0)


def generate(task: EnumerationTask) -> Iterator[Graph]:
    """Stream every graph for ``task`` (ignores budget and checkpoint)."""
    small = _small_case(task)
    if small is not None:
        yield from small
        return
    ckpt = _new_checkpoint(task)
    unique = _UniqueCheck()
    for _, res in _iter_subtask_results(task, ckpt):
        for g in unique(res):
            yield graph6_decode(g)


def save_checkpoint(ckpt: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(ckpt, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_checkpoint(path) -> dict:
    with open(path) as fh:
        return json.load(fh)


__all__ = [
    "EnumerationTask",
    "EnumerationResult",
    "enumerate_graphs",
    "generate",
    "save_checkpoint",
    "load_checkpoint",
]

"""Canonical labeling by partition refinement and individualization.

The search explores the individualization-refinement tree, keeps the
largest leaf certificate, and prunes siblings that lie in one orbit of the
automorphisms found so far that fix the current prefix.  Canonical codes are
the graph6 bytes of the canonically relabeled graph, so they are stable
across runs and platforms.
"""

from __future__ import annotations

from ..formats import graph6_encode_masks
from ..graph import Graph


def _refine(masks, cells, splitters):
    """Refine the ordered partition ``cells`` to an equitable one.

    New pieces of a split cell are ordered by their neighbor count into the
    splitter, which keeps the result invariant under relabeling.
    """
    queue = list(splitters)
    qi = 0
    n = len(masks)
    while qi < len(queue):
        if len(cells) == n:
            break
        w = queue[qi]
        qi += 1
        j = 0
        while j < len(cells):
            cell = cells[j]
            if len(cell) == 1:
                j += 1
                continue
            counts = {}
            for v in cell:
                counts.setdefault((masks[v] & w).bit_count(), []).append(v)
            if len(counts) == 1:
                j += 1
                continue
            pieces = [counts[k] for k in sorted(counts)]
            cells[j:j + 1] = pieces
            for p in pieces:
                m = 0
                for v in p:
                    m |= 1 << v
                queue.append(m)
            j += len(pieces)
    return cells


def _cell_mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


class _Find:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


def canonical_labeling(masks) -> tuple:
    """Return ``(labeling, certificate)``.

    ``labeling[i]`` is the vertex placed at canonical position ``i``;
    ``certificate[i]`` is the neighbor bitmask of position ``i`` in the
    canonical graph.
    """
    n = len(masks)
    if n == 0:
        return (), ()
    by_deg = {}
    for v in range(n):
        by_deg.setdefault(masks[v].bit_count(), []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    cells = _refine(masks, cells, [_cell_mask(c) for c in cells])

    best = [None, None]  # certificate, labeling
    first = [None, None]
    autos = []

    def certificate(lab):
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        cert = []
        for v in lab:
            m = masks[v]
            c = 0
            while m:
                low = m & -m
                c |= 1 << pos[low.bit_length() - 1]
                m ^= low
            cert.append(c)
        return tuple(cert)

    def record_auto(lab_a, lab_b):
        gamma = [0] * n
        for a, b in zip(lab_a, lab_b):
            gamma[a] = b
        if any(gamma[v] != v for v in range(n)):
            autos.append(gamma)

    def leaf(cells):
        lab = tuple(c[0] for c in cells)
        cert = certificate(lab)
        if first[0] is None:
            first[0], first[1] = cert, lab
            best[0], best[1] = cert, lab
            return
        if cert == first[0]:
            record_auto(first[1], lab)
        if cert == best[0]:
            if best[1] != first[1]:
                record_auto(best[1], lab)
        elif cert > best[0]:
            best[0], best[1] = cert, lab

    def search(cells, prefix):
        if len(cells) == n:
            leaf(cells)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = sorted(cells[ti])
        tried = []
        for v in target:
            if tried:
                uf = _Find(n)
                for g in autos:
                    if all(g[p] == p for p in prefix):
                        for x in range(n):
                            uf.union(x, g[x])
                rv = uf.find(v)
                if any(uf.find(u) == rv for u in tried):
                    continue
            rest = [x for x in cells[ti] if x != v]
            new_cells = cells[:ti] + [[v], rest] + cells[ti + 1:]
            search(_refine(masks, new_cells, [1 << v]), prefix + [v])
            tried.append(v)

    search(cells, [])
    return best[1], best[0]


def canonical_masks(masks) -> tuple:
    return canonical_labeling(masks)[1]


def canonical_form(G: Graph) -> Graph:
    return Graph.from_masks(canonical_masks(G.masks))


def canonical_code(G: Graph) -> bytes:
    """Isomorphism-invariant byte string: graph6 of the canonical form."""
    return graph6_encode_masks(canonical_masks(G.masks))


def canonical_perm(G: Graph) -> list:
    """``perm[v]`` = canonical position of vertex ``v``."""
    lab, _ = canonical_labeling(G.masks)
    perm = [0] * G.n
    for i, v in enumerate(lab):
        perm[v] = i
    return perm


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.e == H.e and canonical_code(G) == canonical_code(H)

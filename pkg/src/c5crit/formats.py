"""graph6 and edge-list codecs.

graph6 packs the upper triangle of the adjacency matrix column by column,
``x(0,1), x(0,2), x(1,2), x(0,3), ...``, six bits per printable byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ParseError
from .graph import Graph, read_edge_list, write_edge_list

__all__ = [
    "graph6_encode",
    "graph6_decode",
    "read_graphs",
    "read_edge_list",
    "write_edge_list",
]

HEADER = b">>graph6<<"
_MAX_N = 68719476735


def _size_prefix(n: int) -> bytes:
    if n < 0 or n > _MAX_N:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def graph6_encode_masks(masks) -> bytes:
    n = len(masks)
    out = bytearray(_size_prefix(n))
    acc = nbits = 0
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            acc = (acc << 1) | ((mj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_encode(G: Graph) -> str:
    """graph6 text (no header, no newline)."""
    return graph6_encode_masks(G.masks).decode("ascii")


def graph6_decode(line) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    base = 0
    if data.startswith(HEADER):
        base = len(HEADER)
        data = data[base:]
    for pos, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise ParseError(f"byte {ch!r} outside graph6 range 63..126", base + pos)
    if not data:
        raise ParseError("empty graph6 line", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated size prefix", base + len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated size prefix", base + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ch - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} adjacency bytes for n={n}, found {len(body)}",
                         base + pos + min(len(body), need))
    masks = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    if nbits % 6:
        tail = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if tail:
            raise ParseError("nonzero padding bits", base + pos + len(body) - 1)
    return Graph.from_masks(masks)


def looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.isdigit() for p in parts)
    return False


def read_graphs(text: str, fmt: str = "auto") -> Iterator[Graph]:
    """Graphs from text: one graph6 per line, or a single edge list."""
    if fmt == "edgelist" or (fmt == "auto" and looks_like_edge_list(text)):
        yield read_edge_list(text)
        return
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield graph6_decode(line)


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)

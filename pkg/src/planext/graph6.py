"""graph6 reading and writing.

Format reference: http://users.cecs.anu.edu.au/~bdm/data/formats.txt
Only undirected simple graphs are handled (no sparse6/digraph6).
"""

from __future__ import annotations

from .graph import AbstractGraph

HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def write_graph6(g: AbstractGraph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adjacency[j]
        bits.extend(1 if i in row else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def _sextet(text: str, pos: int) -> int:
    c = ord(text[pos])
    if not 63 <= c <= 126:
        raise GraphFormatError(f"byte {c!r} out of range 63..126", pos)
    return c - 63


def read_graph6(text: str) -> AbstractGraph:
    """Parse one graph6 string; a single trailing newline is tolerated."""
    if text.endswith("\n"):
        text = text[:-1]
    start = len(HEADER) if text.startswith(HEADER) else 0
    pos = start
    if pos >= len(text):
        raise GraphFormatError("missing size header", pos)
    if text[pos] != "~":
        n = _sextet(text, pos)
        pos += 1
    else:
        width = 3
        pos += 1
        if pos < len(text) and text[pos] == "~":
            width = 6
            pos += 1
        if pos + width > len(text):
            raise GraphFormatError("truncated size header", len(text))
        n = 0
        for _ in range(width):
            n = (n << 6) | _sextet(text, pos)
            pos += 1
        if (width == 3 and n < 63) or (width == 6 and n < 258048):
            raise GraphFormatError("non-canonical size header", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) - pos < nbytes:
        raise GraphFormatError(
            f"truncated adjacency data: expected {nbytes} bytes, got {len(text) - pos}", len(text)
        )
    if len(text) - pos > nbytes:
        raise GraphFormatError("trailing garbage after adjacency data", pos + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = _sextet(text, pos + k // 6)
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbytes:
        last = _sextet(text, pos + nbytes - 1)
        pad = nbytes * 6 - nbits
        if last & ((1 << pad) - 1):
            raise GraphFormatError("non-zero padding bits", pos + nbytes - 1)
    return AbstractGraph.from_edges(n, edges)

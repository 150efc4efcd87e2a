"""graph6 encoding (one graph per line).

Layout: N(n) followed by the upper triangle of the adjacency matrix read
column by column, x(0,1) x(0,2) x(1,2) x(0,3) ..., packed six bits per byte
(big end first), zero-padded, each byte offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GraphInputError
from .graph import Graph

HEADER = b">>graph6<<"
MAX_ORDER = 258047


def _encode_order(n: int) -> bytes:
    if n < 0 or n > MAX_ORDER:
        raise GraphInputError(f"graph6 order must be in [0, {MAX_ORDER}], got {n}")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def emit_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    out = bytearray(_encode_order(g.n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = acc << 1 | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line. A single trailing newline is tolerated."""
    if isinstance(text, str):
        text = text.encode("ascii")
    if text.endswith(b"\n"):
        text = text[:-1]
    if not text:
        raise GraphInputError("empty graph6 line")
    for c in text:
        if not 63 <= c <= 126:
            raise GraphInputError(f"byte {c!r} outside graph6 range 63..126")
    if text[0] == 126:
        if len(text) < 4 or text[1] == 126:
            raise GraphInputError("unsupported or truncated long-form graph6 order")
        n = (text[1] - 63) << 12 | (text[2] - 63) << 6 | (text[3] - 63)
        if n <= 62:
            raise GraphInputError("non-canonical long-form order")
        body = text[4:]
    else:
        n = text[0] - 63
        body = text[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) < expected:
        raise GraphInputError(f"graph6 body too short: {len(body)} < {expected}")
    if len(body) > expected:
        raise GraphInputError("trailing bytes after graph6 body")
    rows = [0] * n
    pos = 0
    i, j = 0, 1
    for byte in body:
        val = byte - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if pos < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise GraphInputError("nonzero graph6 padding bits")
            pos += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks and the optional header."""
    for raw in lines:
        if isinstance(raw, str):
            raw = raw.encode("ascii")
        line = raw.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if line:
            yield parse_graph6(line)


def graph6_str(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")

"""graph6 and edge-list text formats.

graph6 follows the published layout: a size header N(n) followed by the
upper triangle of the adjacency matrix, column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``), packed six bits per byte with
63 added. Only simple graphs fit.

The edge-list format holds multigraphs::

    n 4
    0 1
    0 1
    ...

one line per edge instance, so repetition encodes multiplicity.
"""

from __future__ import annotations

from ..errors import GraphFormatError
from .graph import Graph

_HEADER = ">>graph6<<"


def _size_header(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError(f"graph too large for graph6: n={n}")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise GraphFormatError("empty graph6 string", offset=base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", offset=base + i)

    def word(start: int, count: int) -> int:
        if len(s) < start + count:
            raise GraphFormatError("truncated size header", offset=base + len(s))
        val = 0
        for ch in s[start:start + count]:
            val = (val << 6) | (ord(ch) - 63)
        return val

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) > 1 and s[1] == "~":
        n, pos = word(2, 6), 8
    else:
        n, pos = word(1, 3), 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit field: expected {nbytes} data bytes, got {len(body)}",
            offset=base + len(s),
        )
    if len(body) > nbytes:
        raise GraphFormatError("trailing data after bit field", offset=base + pos + nbytes)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero
    if nbytes and k % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - k % 6)) - 1):
            raise GraphFormatError("nonzero padding bits", offset=base + pos + nbytes - 1)
    return Graph(n, edges)


def to_graph6(graph: Graph) -> str:
    if not graph.is_simple():
        raise GraphFormatError("graph6 holds simple graphs only; use the edge-list format for multigraphs")
    n = graph.vertex_count
    present = set(graph.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    out = [_size_header(n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    offset = 0
    n = None
    edges = []
    for raw, ln in zip(text.splitlines(keepends=True), lines):
        if ln:
            parts = ln.split()
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise GraphFormatError("first line must be 'n <vertex_count>'", offset=offset)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise GraphFormatError(f"bad vertex count {parts[1]!r}", offset=offset) from None
                if n < 0:
                    raise GraphFormatError("negative vertex count", offset=offset)
            else:
                if len(parts) != 2:
                    raise GraphFormatError(f"expected 'u v', got {ln!r}", offset=offset)
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise GraphFormatError(f"non-integer vertex in {ln!r}", offset=offset) from None
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphFormatError(f"vertex index out of range 0..{n - 1} in {ln!r}", offset=offset)
                edges.append((u, v))
        offset += len(raw.encode())
    if n is None:
        raise GraphFormatError("missing 'n <vertex_count>' line", offset=0)
    return Graph(n, edges)


def write_edge_list(graph: Graph) -> str:
    lines = [f"n {graph.vertex_count}"]
    lines += [f"{u} {v}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"

"""graph6 reading and writing (McKay's format, undirected simple graphs)."""

from __future__ import annotations

from .core import Graph, _pairs

__all__ = ["Graph6Error", "parse_graph6", "write_graph6", "read_graph6_file"]

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("too many vertices for graph6")


def write_graph6(G: Graph, header: bool = False) -> str:
    bits = [1 if (i, j) in G.edges else 0 for i, j in _pairs(G.n)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return (HEADER if header else "") + _encode_n(G.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    start = 0
    if s.startswith(HEADER):
        start = len(HEADER)
    data = s[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", start + k)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    elif len(data) >= 2 and data[1] != "~":
        if len(data) < 4:
            raise Graph6Error("truncated vertex count", start + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise Graph6Error("truncated vertex count", start + len(data))
        n = 0
        for ch in data[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    pairs = _pairs(n)
    need = (len(pairs) + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}",
            start + pos + min(len(body), need),
        )
    edges = []
    for idx, (i, j) in enumerate(pairs):
        byte = ord(body[idx // 6]) - 63
        if byte >> (5 - idx % 6) & 1:
            edges.append((i, j))
    pad = len(pairs) % 6
    if pad and (ord(body[-1]) - 63) & ((1 << (6 - pad)) - 1):
        raise Graph6Error("nonzero padding bits", start + pos + need - 1)
    return Graph(n, edges)


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                graphs.append(parse_graph6(line))
    return graphs

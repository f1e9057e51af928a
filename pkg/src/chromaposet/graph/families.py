"""Named graph families.

Vertex ``i`` of the usual 1-based labelling is vertex ``i - 1`` here.
"""

from __future__ import annotations

from itertools import combinations

from .core import Graph

__all__ = [
    "make_complete",
    "make_path",
    "make_cycle",
    "make_star",
    "make_lollipop",
    "make_unit_interval",
    "unit_interval_sequences",
]


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def make_star(n: int) -> Graph:
    """Centre is the last vertex."""
    if n < 4:
        raise ValueError("star needs n >= 4")
    return Graph(n, ((j, n - 1) for j in range(n - 1)))


def make_lollipop(m: int, n: int) -> Graph:
    """K_m on the first m vertices with a path of n more hanging off vertex m-1."""
    if m < 1 or n < 0:
        raise ValueError("lollipop needs m >= 1 and n >= 0")
    edges = list(combinations(range(m), 2))
    edges += [(i, i + 1) for i in range(m - 1, m + n - 1)]
    return Graph(m + n, edges)


def _check_sequence(mseq, n):
    for i, mi in enumerate(mseq, start=1):
        if not i <= mi <= n:
            raise ValueError(f"entry m_{i}={mi} outside [{i}, {n}]")
        if i > 1 and mseq[i - 2] > mi:
            raise ValueError(f"sequence {tuple(mseq)} is not weakly increasing")


def make_unit_interval(mseq) -> Graph:
    """Graph on n = len(mseq)+1 vertices, a clique on each window [i, m_i]."""
    mseq = [int(x) for x in mseq]
    n = len(mseq) + 1
    _check_sequence(mseq, n)
    edges = set()
    for i, mi in enumerate(mseq, start=1):
        for b in range(i + 1, mi + 1):
            edges.add((i - 1, b - 1))
    return Graph(n, edges)


def unit_interval_sequences(n: int, connected: bool = False):
    """Every valid weakly increasing sequence of length n-1."""
    out = []

    def rec(i, lo, prefix):
        if i == n:
            out.append(tuple(prefix))
            return
        start = max(lo, i + 1 if connected else i)
        for mi in range(start, n + 1):
            prefix.append(mi)
            rec(i + 1, mi, prefix)
            prefix.pop()

    if n < 1:
        raise ValueError("n must be positive")
    rec(1, 1, [])
    return out

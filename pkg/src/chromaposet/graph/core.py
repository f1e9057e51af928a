"""Simple graphs on vertices ``0..n-1`` and their canonical forms."""

from __future__ import annotations

import re
from functools import cached_property
from itertools import permutations
from math import factorial, prod

import numpy as np

__all__ = ["Graph", "canonical_key", "parse_edge_list", "format_edge_list"]


class Graph:
    """Immutable simple graph. Edges are stored as sorted pairs ``(u, v)``, ``u < v``."""

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges=()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        clean = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            clean.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = frozenset(clean)

    # -- basic structure ---------------------------------------------------

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        adj = self.adjacency
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                w = frontier
                while w:
                    low = w & -w
                    nxt |= adj[low.bit_length() - 1]
                    w ^= low
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def induced_is_connected(self, mask: int) -> bool:
        if not mask:
            return False
        adj = self.adjacency
        start = mask & -mask
        comp = frontier = start
        while frontier:
            nxt = 0
            w = frontier
            while w:
                low = w & -w
                nxt |= adj[low.bit_length() - 1]
                w ^= low
            frontier = nxt & mask & ~comp
            comp |= frontier
        return comp == mask

    # -- constructions -----------------------------------------------------

    def relabel(self, perm) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def delete_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges - {(min(u, v), max(u, v))})

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Merge ``v`` into ``u``; parallel edges collapse and the loop is dropped."""
        u, v = min(u, v), max(u, v)

        def f(x):
            if x == v:
                x = u
            return x - 1 if x > v else x

        edges = {(f(a), f(b)) for a, b in self.edges if {a, b} != {u, v}}
        return Graph(self.n - 1, (e for e in edges if e[0] != e[1]))

    def complement(self) -> "Graph":
        return Graph(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                              if (u, v) not in self.edges))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n,
                     list(self.edges) + [(u + shift, v + shift) for u, v in other.edges])

    def induced_subgraph(self, vertices) -> "Graph":
        vertices = sorted(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(len(vertices), ((index[u], index[v]) for u, v in self.edges
                                     if u in index and v in index))

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"

    @cached_property
    def canonical_labeling(self) -> tuple[int, ...]:
        return _canonical(self)[0]

    @cached_property
    def canonical_key(self) -> tuple[int, int]:
        """``(n, bits)`` where ``bits`` is the minimal graph6-order adjacency string."""
        return (self.n, _canonical(self)[1])

    def canonical(self) -> "Graph":
        lab = self.canonical_labeling
        return self.relabel(lab)

    def is_isomorphic(self, other: "Graph") -> bool:
        return self.canonical_key == other.canonical_key

    def graph6(self) -> str:
        from .graph6 import write_graph6
        return write_graph6(self)


def canonical_key(G: Graph) -> tuple[int, int]:
    return G.canonical_key


def _pairs(n: int):
    """Vertex pairs in graph6 bit order (upper triangle, column-major)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _bits_of(G: Graph) -> int:
    key = 0
    for i, j in _pairs(G.n):
        key = (key << 1) | ((i, j) in G.edges)
    return key


def _refine(G: Graph) -> list[int]:
    """Isomorphism-invariant vertex colouring by iterated degree refinement."""
    adj = G.adjacency
    nbrs = [[w for w in range(G.n) if adj[v] >> w & 1] for v in range(G.n)]
    colors = [len(nb) for nb in nbrs]
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(G.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _cell_orderings(cells: list[list[int]]) -> np.ndarray:
    """All position->vertex maps that keep each cell in its block of positions."""
    out = np.zeros((1, 0), dtype=np.int64)
    for cell in cells:
        block = np.array(list(permutations(cell)), dtype=np.int64)
        reps = out.shape[0]
        out = np.concatenate(
            [np.repeat(out, block.shape[0], axis=0), np.tile(block, (reps, 1))], axis=1
        )
    return out


def _canonical(G: Graph) -> tuple[tuple[int, ...], int]:
    """Minimal graph6 bit string over labelings compatible with the refined colouring.

    Colours are isomorphism invariant, so the candidate set of labelings is
    carried along by any isomorphism and the minimum is a complete invariant.
    Returns ``(perm, bits)`` with ``perm[v]`` the new label of vertex ``v``.
    """
    n = G.n
    if n <= 1:
        return tuple(range(n)), 0
    colors = _refine(G)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    pairs = _pairs(n)
    count = prod(factorial(len(c)) for c in cells)
    if count == 1:
        order = [c[0] for c in cells]
        perm = [0] * n
        for pos, v in enumerate(order):
            perm[v] = pos
        return tuple(perm), _bits_of(G.relabel(perm))
    orders = _cell_orderings(cells)
    A = np.zeros((n, n), dtype=np.uint8)
    for u, v in G.edges:
        A[u, v] = A[v, u] = 1
    ii = np.array([p[0] for p in pairs])
    jj = np.array([p[1] for p in pairs])
    bits = A[orders[:, ii], orders[:, jj]]
    if len(pairs) <= 62:
        weights = (1 << np.arange(len(pairs) - 1, -1, -1, dtype=np.int64))
        keys = bits.astype(np.int64) @ weights
        best = int(np.argmin(keys))
        key = int(keys[best])
    else:
        best = int(np.lexsort(bits.T[::-1])[0])
        key = int("".join(map(str, bits[best])), 2)
    order = orders[best]
    perm = [0] * n
    for pos, v in enumerate(order):
        perm[int(v)] = pos
    return tuple(perm), key


_EDGE_LIST = re.compile(r"^\s*(\d+)\s*(?:;\s*(.*))?$", re.S)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n; u-v, u-v, ..."`` with 0-based vertices."""
    m = _EDGE_LIST.match(text)
    if not m:
        raise ValueError(f"cannot parse edge list {text!r}")
    n = int(m.group(1))
    edges = []
    body = (m.group(2) or "").strip()
    if body:
        for token in body.split(","):
            token = token.strip()
            if not token:
                continue
            em = re.fullmatch(r"(\d+)\s*-\s*(\d+)", token)
            if not em:
                raise ValueError(f"bad edge {token!r} in {text!r}")
            edges.append((int(em.group(1)), int(em.group(2))))
    return Graph(n, edges)


def format_edge_list(G: Graph) -> str:
    return f"{G.n}; " + ", ".join(f"{u}-{v}" for u, v in G.sorted_edges())

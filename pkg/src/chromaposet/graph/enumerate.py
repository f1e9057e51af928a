"""Isomorphism classes of connected graphs."""

from __future__ import annotations

from functools import lru_cache

from .core import Graph

__all__ = ["enumerate_connected", "MAX_ENUMERATION_N"]

MAX_ENUMERATION_N = 8


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    # every connected graph has a vertex whose removal leaves it connected
    seen: dict[tuple[int, int], Graph] = {}
    for H in _connected_classes(n - 1):
        base = list(H.edges)
        for nbrs in range(1, 1 << (n - 1)):
            G = Graph(n, base + [(v, n - 1) for v in range(n - 1) if nbrs >> v & 1])
            key = G.canonical_key
            if key not in seen:
                seen[key] = G.canonical()
    return tuple(sorted(seen.values(), key=lambda G: (G.num_edges, G.canonical_key)))


def enumerate_connected(n: int) -> list[Graph]:
    """One canonically labelled representative per class, ordered by (edges, key)."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumerate_connected supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    return list(_connected_classes(n))

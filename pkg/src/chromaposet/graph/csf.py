"""Chromatic symmetric functions by three independent routes."""

from __future__ import annotations

from fractions import Fraction

from ..partition import Partition, automorphism_factor
from ..symfunc import Basis, SymFunc
from .core import Graph

__all__ = [
    "csf_power_sum",
    "csf_stable_partition",
    "csf_bond_lattice",
    "stable_partition_counts",
    "connected_partitions",
    "bond_lattice_mobius",
    "POWER_SUM_MAX_EDGES",
    "BOND_LATTICE_MAX_N",
    "csf",
]

POWER_SUM_MAX_EDGES = 28
BOND_LATTICE_MAX_N = 7


def _type(sizes) -> Partition:
    return Partition._trusted(tuple(sorted(sizes, reverse=True)))


def _canon_labels(labels) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


def csf_power_sum(G: Graph, method: str = "merge") -> SymFunc:
    """Sum over edge subsets S of (-1)^|S| p_{lambda(S)}.

    ``"subsets"`` visits every subset; ``"merge"`` folds the same sum edge by
    edge, keeping signed counts per component partition of the vertices.
    """
    if G.num_edges > POWER_SUM_MAX_EDGES:
        raise ValueError(
            f"edge-subset expansion is capped at {POWER_SUM_MAX_EDGES} edges "
            f"(graph has {G.num_edges}); use csf_stable_partition instead"
        )
    n = G.n
    edges = G.sorted_edges()
    coeffs: dict[Partition, int] = {}
    if method == "subsets":
        for bits in range(1 << len(edges)):
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            sign = 1
            for idx, (u, v) in enumerate(edges):
                if bits >> idx & 1:
                    sign = -sign
                    ru, rv = find(u), find(v)
                    if ru != rv:
                        parent[ru] = rv
            sizes: dict[int, int] = {}
            for x in range(n):
                r = find(x)
                sizes[r] = sizes.get(r, 0) + 1
            lam = _type(sizes.values())
            coeffs[lam] = coeffs.get(lam, 0) + sign
    elif method == "merge":
        states = {tuple(range(n)): 1}
        for u, v in edges:
            nxt: dict[tuple[int, ...], int] = {}
            for labels, c in states.items():
                nxt[labels] = nxt.get(labels, 0) + c
                a, b = labels[u], labels[v]
                merged = labels if a == b else _canon_labels(a if x == b else x for x in labels)
                nxt[merged] = nxt.get(merged, 0) - c
            states = {k: c for k, c in nxt.items() if c}
        for labels, c in states.items():
            sizes = {}
            for x in labels:
                sizes[x] = sizes.get(x, 0) + 1
            lam = _type(sizes.values())
            coeffs[lam] = coeffs.get(lam, 0) + c
    else:
        raise ValueError(f"unknown method {method!r}")
    return SymFunc(n, Basis.P, coeffs)


def stable_partition_counts(G: Graph) -> dict[Partition, int]:
    """Number of stable partitions of each type, by set-partition backtracking."""
    n, adj = G.n, G.adjacency
    counts: dict[Partition, int] = {}
    blocks: list[int] = []

    def place(v: int):
        if v == n:
            lam = _type(bin(b).count("1") for b in blocks)
            counts[lam] = counts.get(lam, 0) + 1
            return
        for i, b in enumerate(blocks):
            if not adj[v] & b:
                blocks[i] = b | (1 << v)
                place(v + 1)
                blocks[i] = b
        blocks.append(1 << v)
        place(v + 1)
        blocks.pop()

    place(0)
    return counts


def csf_stable_partition(G: Graph) -> SymFunc:
    """X_G = sum over types lambda of a_lambda * lambda! * m_lambda."""
    counts = stable_partition_counts(G)
    return SymFunc(G.n, Basis.M, {lam: a * automorphism_factor(lam) for lam, a in counts.items()})


def connected_partitions(G: Graph) -> list[tuple[int, ...]]:
    """Connected partitions as tuples of block bitmasks (each sorted)."""
    n = G.n
    out = []
    blocks: list[int] = []

    def place(v: int):
        if v == n:
            if all(G.induced_is_connected(b) for b in blocks):
                out.append(tuple(sorted(blocks)))
            return
        for i, b in enumerate(blocks):
            blocks[i] = b | (1 << v)
            place(v + 1)
            blocks[i] = b
        blocks.append(1 << v)
        place(v + 1)
        blocks.pop()

    place(0)
    return out


def _refines(finer, coarser) -> bool:
    return all(any(b & ~c == 0 for c in coarser) for b in finer)


def bond_lattice_mobius(G: Graph) -> dict[tuple[int, ...], int]:
    """mu(0, pi) on the bond lattice, by the defining recursion from the bottom."""
    parts = connected_partitions(G)
    parts.sort(key=len, reverse=True)
    mu: dict[tuple[int, ...], int] = {}
    for pi in parts:
        if len(pi) == G.n:
            mu[pi] = 1
            continue
        total = 0
        for sigma, val in mu.items():
            if len(sigma) > len(pi) and _refines(sigma, pi):
                total += val
        mu[pi] = -total
    return mu


def csf_bond_lattice(G: Graph) -> SymFunc:
    """X_G = sum over connected partitions pi of mu(0, pi) p_{type(pi)}."""
    if G.n > BOND_LATTICE_MAX_N:
        raise ValueError(f"bond lattice route supports n <= {BOND_LATTICE_MAX_N}")
    if not G.is_connected():
        raise ValueError("bond lattice route expects a connected graph")
    coeffs: dict[Partition, Fraction] = {}
    for pi, val in bond_lattice_mobius(G).items():
        lam = _type(bin(b).count("1") for b in pi)
        coeffs[lam] = coeffs.get(lam, 0) + val
    return SymFunc(G.n, Basis.P, coeffs)


def csf(G: Graph, basis="m") -> SymFunc:
    """X_G in any basis, via stable partitions."""
    return csf_stable_partition(G).to(basis)

"""Chromatic polynomial, acyclic orientations and classical graph parameters."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import Graph

__all__ = [
    "ChromaticPolynomial",
    "chromatic_polynomial",
    "SinkProfile",
    "sink_profile",
    "acyclic_orientation_count",
    "e_top_coefficient",
    "s_bottom_coefficient",
    "independence_number",
    "clique_number",
    "chromatic_number",
]


@dataclass(frozen=True)
class ChromaticPolynomial:
    """``coeffs[j]`` is the coefficient of k^j."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, k) -> int:
        return sum(c * k ** j for j, c in enumerate(self.coeffs))

    def coefficient(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __str__(self):
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c:
                mono = "" if j == 0 else ("k" if j == 1 else f"k^{j}")
                mag = abs(c)
                body = f"{mag}{mono}" if mag != 1 or not mono else mono
                terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return s + "".join(f" {sign} {body}" for sign, body in terms[1:])

    @classmethod
    def from_roots(cls, roots) -> "ChromaticPolynomial":
        """Product of (k - r) over ``roots``."""
        poly = [1]
        for r in roots:
            nxt = [0] * (len(poly) + 1)
            for j, c in enumerate(poly):
                nxt[j + 1] += c
                nxt[j] -= r * c
            poly = nxt
        return cls(tuple(poly))


def _poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for j, c in enumerate(a):
        out[j] += c
    for j, c in enumerate(b):
        out[j] -= c
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


_CHROMATIC_MEMO: dict[tuple[int, int], tuple[int, ...]] = {}
_MEMO_LOCK = threading.Lock()


def _falling(n: int) -> list[int]:
    return list(ChromaticPolynomial.from_roots(range(n)).coeffs)


def _chromatic(G: Graph) -> list[int]:
    n, m = G.n, G.num_edges
    if m == 0:
        return [0] * n + [1]
    if 2 * m == n * (n - 1):
        return _falling(n)
    comps = G.components()
    if len(comps) > 1:
        poly = [1]
        for mask in comps:
            sub = G.induced_subgraph(v for v in range(n) if mask >> v & 1)
            poly = _poly_mul(poly, _chromatic_cached(sub))
        return poly
    if m == n - 1:
        # tree: k (k-1)^(n-1)
        poly = [0, 1]
        for _ in range(n - 1):
            poly = _poly_mul(poly, [-1, 1])
        return poly
    # branch on an edge at a max-degree vertex
    u = max(range(n), key=G.degree)
    v = max((w for w in range(n) if G.has_edge(u, w)), key=G.degree)
    return _poly_sub(_chromatic_cached(G.delete_edge(u, v)),
                     _chromatic_cached(G.contract_edge(u, v)))


def _chromatic_cached(G: Graph) -> list[int]:
    key = G.canonical_key
    hit = _CHROMATIC_MEMO.get(key)
    if hit is not None:
        return list(hit)
    poly = _chromatic(G)
    with _MEMO_LOCK:
        _CHROMATIC_MEMO.setdefault(key, tuple(poly))
    return poly


def chromatic_polynomial(G: Graph) -> ChromaticPolynomial:
    """Deletion-contraction, memoised on the canonical form."""
    poly = _chromatic_cached(G)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return ChromaticPolynomial(tuple(poly))


def e_top_coefficient(G: Graph) -> Fraction:
    """[e_(n)] X_G = (-1)^(n-1) n [k] chi_G(k)."""
    n = G.n
    return Fraction((-1) ** (n - 1) * n * chromatic_polynomial(G).coefficient(1))


def s_bottom_coefficient(G: Graph) -> Fraction:
    """[s_(1^n)] X_G = (-1)^n chi_G(-1), the number of acyclic orientations."""
    return Fraction((-1) ** G.n * chromatic_polynomial(G)(-1))


def acyclic_orientation_count(G: Graph) -> int:
    return int(s_bottom_coefficient(G))


# -- acyclic orientations by number of sinks ---------------------------------

@dataclass(frozen=True)
class SinkProfile:
    """``counts[j-1]`` acyclic orientations have exactly ``j`` sinks."""

    counts: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.counts[j - 1] if 1 <= j <= len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)


def _is_independent(adj, mask: int) -> bool:
    w = mask
    while w:
        low = w & -w
        if adj[low.bit_length() - 1] & mask:
            return False
        w ^= low
    return True


def _submasks(mask: int):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def _sinks_by_layers(G: Graph) -> list[int]:
    """Peel sink layers: an acyclic orientation is the same thing as an ordered
    partition into independent layers where each vertex of layer k+1 has a
    neighbour in layer k. The first layer is the sink set."""
    n, adj = G.n, G.adjacency
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def rest(remaining: int, previous: int) -> int:
        if not remaining:
            return 1
        eligible = 0
        w = remaining
        while w:
            low = w & -w
            if adj[low.bit_length() - 1] & previous:
                eligible |= low
            w ^= low
        return sum(rest(remaining & ~layer, layer)
                   for layer in _submasks(eligible) if _is_independent(adj, layer))

    counts = [0] * n
    for first in _submasks(full):
        if _is_independent(adj, first):
            counts[bin(first).count("1") - 1] += rest(full & ~first, first)
    return counts


def _sinks_by_orientations(G: Graph) -> list[int]:
    n, edges = G.n, G.sorted_edges()
    counts = [0] * n
    for bits in range(1 << len(edges)):
        out = [0] * n
        for idx, (u, v) in enumerate(edges):
            if bits >> idx & 1:
                out[v] |= 1 << u
            else:
                out[u] |= 1 << v
        sinks = sum(1 for v in range(n) if not out[v])
        alive = (1 << n) - 1
        while True:
            drop = 0
            for v in range(n):
                if alive >> v & 1 and not (out[v] & alive):
                    drop |= 1 << v
            if not drop:
                break
            alive &= ~drop
        if not alive:
            counts[sinks - 1] += 1
    return counts


ORIENTATION_ENUMERATION_MAX_EDGES = 12


def sink_profile(G: Graph, method: str = "auto") -> SinkProfile:
    """S(G, j) for j = 1..n.

    ``"enumerate"`` walks all 2^|E| orientations; ``"layers"`` uses the
    sink-layer recursion. ``"auto"`` enumerates for small edge counts.
    """
    if G.n == 0:
        return SinkProfile(())
    if method == "auto":
        method = "enumerate" if G.num_edges <= ORIENTATION_ENUMERATION_MAX_EDGES else "layers"
    if method == "enumerate":
        counts = _sinks_by_orientations(G)
    elif method == "layers":
        counts = _sinks_by_layers(G)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SinkProfile(tuple(counts))


# -- classical parameters ----------------------------------------------------

EXACT_SEARCH_MAX_N = 10


def _check_size(G: Graph):
    if G.n > EXACT_SEARCH_MAX_N:
        raise ValueError(f"exact search supports n <= {EXACT_SEARCH_MAX_N}")


def _max_independent(adj, candidates: int) -> int:
    if not candidates:
        return 0
    v = (candidates & -candidates).bit_length() - 1
    rest = candidates & ~(1 << v)
    take = 1 + _max_independent(adj, rest & ~adj[v])
    if not (adj[v] & rest):
        return take
    return max(take, _max_independent(adj, rest))


def independence_number(G: Graph) -> int:
    _check_size(G)
    return _max_independent(G.adjacency, (1 << G.n) - 1)


def clique_number(G: Graph) -> int:
    _check_size(G)
    return independence_number(G.complement())


def _colourable(G: Graph, k: int) -> bool:
    order = sorted(range(G.n), key=G.degree, reverse=True)
    colour = [-1] * G.n
    adj = G.adjacency

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned = {colour[w] for w in range(G.n) if adj[v] >> w & 1}
        for c in range(min(used + 1, k)):
            if c not in banned:
                colour[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
        colour[v] = -1
        return False

    return place(0, 0)


def chromatic_number(G: Graph) -> int:
    _check_size(G)
    if G.n == 0:
        return 0
    lower = clique_number(G)
    for k in range(lower, G.n + 1):
        if _colourable(G, k):
            return k
    return G.n

"""The chromatic posets on CSF classes of connected graphs.

``G >= H`` in the e-order when ``X_G - (c_G / c_H) X_H`` is e-positive, where
``c`` is the e_(n) coefficient; the s-order uses s_(1^n) and Schur positivity.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .graph import (
    Graph,
    chromatic_number,
    csf_stable_partition,
    enumerate_connected,
    independence_number,
    make_complete,
    make_lollipop,
    make_path,
    make_unit_interval,
    unit_interval_sequences,
)
from .partition import Partition
from .symfunc import Basis, SymFunc, multiply

__all__ = [
    "Order",
    "CsfClass",
    "ChromaticPoset",
    "CheckReport",
    "PosetAxiomError",
    "weighted_difference",
    "related",
    "csf_classes",
    "build_poset",
    "hasse_edges",
    "mobius",
    "maximal_elements",
    "minimal_elements",
    "independent_elements",
    "verify_antichain",
    "verify_statistic_monotonicity",
    "lollipop_chain_check",
    "conjecture_move",
    "conjecture_check",
    "to_dot",
    "to_csv",
    "to_json",
    "POSET_MIN_N",
    "POSET_MAX_N",
]

POSET_MIN_N = 2
POSET_MAX_N = 7


class Order(str, Enum):
    E = "e"
    S = "s"

    @classmethod
    def of(cls, value) -> "Order":
        return value if isinstance(value, cls) else cls(str(value).lower())

    @property
    def basis(self) -> Basis:
        return Basis(self.value)

    def anchor(self, n: int) -> Partition:
        """The partition whose coefficient scales the difference."""
        return Partition((n,)) if self is Order.E else Partition((1,) * n)


class PosetAxiomError(AssertionError):
    """The relation matrix failed antisymmetry or transitivity."""


@dataclass(frozen=True)
class CheckReport:
    check: str
    passed: bool
    order: str | None = None
    n: int | None = None
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "order": self.order,
            "n": self.n,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            **({"details": self.details} if self.details else {}),
        }


# -- single pairs -------------------------------------------------------------

def _check_pair(G: Graph, H: Graph):
    if G.n != H.n:
        raise ValueError(f"graphs have different vertex counts ({G.n} and {H.n})")
    for X in (G, H):
        if not X.is_connected():
            raise ValueError(f"poset relations are defined for connected graphs only: {X!r}")


@lru_cache(maxsize=4096)
def _expansion(G: Graph, basis: Basis) -> SymFunc:
    return csf_stable_partition(G).to(basis)


def _csf_in(G: Graph, basis: Basis) -> SymFunc:
    return _expansion(G.canonical(), basis)


def weighted_difference(G: Graph, H: Graph, order) -> SymFunc:
    """X_G - (c_G / c_H) X_H, expressed in the order's basis."""
    order = Order.of(order)
    _check_pair(G, H)
    XG, XH = _csf_in(G, order.basis), _csf_in(H, order.basis)
    anchor = order.anchor(G.n)
    cG, cH = XG[anchor], XH[anchor]
    assert cH > 0, "anchor coefficient must be positive"
    return XG - (cG / cH) * XH


def related(G: Graph, H: Graph, order) -> bool:
    """Is G >= H?"""
    return all(c >= 0 for c in weighted_difference(G, H, order).coeffs.values())


# -- classes and the full poset ----------------------------------------------

@dataclass(frozen=True)
class CsfClass:
    representative: Graph
    members: tuple[Graph, ...]
    csf: SymFunc
    e_top: int
    s_bottom: int

    @property
    def graph6(self) -> str:
        return self.representative.graph6()


def _integer_vector(F: SymFunc) -> list[int]:
    out = []
    for c in F.vector():
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        out.append(c.numerator)
    return out


def _csf_worker(g6: str) -> dict:
    from .graph import parse_graph6
    return csf_stable_partition(parse_graph6(g6)).to_json_dict()


def _compute_csfs(graphs, jobs: int) -> list[SymFunc]:
    if jobs <= 1 or len(graphs) < 2:
        return [csf_stable_partition(G) for G in graphs]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        data = list(pool.map(_csf_worker, [G.graph6() for G in graphs], chunksize=32))
    return [SymFunc.from_json(d) for d in data]


def csf_classes(n: int, jobs: int = 1, csf_table: dict | None = None) -> list[CsfClass]:
    """Group the connected graphs on n vertices by CSF.

    ``csf_table`` maps graph6 of canonical representatives to known m-basis
    expansions; missing entries are computed and added to it.
    """
    if not POSET_MIN_N <= n <= POSET_MAX_N:
        raise ValueError(f"posets are supported for {POSET_MIN_N} <= n <= {POSET_MAX_N}, got {n}")
    graphs = enumerate_connected(n)
    table = {} if csf_table is None else csf_table
    missing = [G for G in graphs if G.graph6() not in table]
    for G, X in zip(missing, _compute_csfs(missing, jobs)):
        table[G.graph6()] = X
    groups: dict[tuple, list[Graph]] = {}
    csfs: dict[tuple, SymFunc] = {}
    for G in graphs:
        X = table[G.graph6()].to(Basis.M)
        key = tuple(X.vector())
        groups.setdefault(key, []).append(G)
        csfs[key] = X
    classes = []
    for key, members in groups.items():
        members.sort(key=lambda G: G.graph6())
        X = csfs[key]
        classes.append(CsfClass(
            representative=members[0],
            members=tuple(members),
            csf=X,
            e_top=int(X.to(Basis.E)[Partition((n,))]),
            s_bottom=int(X.to(Basis.S)[Partition((1,) * n)]),
        ))
    classes.sort(key=lambda c: (c.representative.num_edges, c.graph6))
    return classes


@dataclass(frozen=True, eq=False)
class ChromaticPoset:
    """``leq[i, j]`` is True when element i <= element j."""

    order: Order
    n: int
    elements: tuple[CsfClass, ...]
    leq: np.ndarray
    _mobius_rows: dict = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(len(self), dtype=bool)

    def index_of(self, G: Graph) -> int:
        key = G.canonical_key
        for i, cls in enumerate(self.elements):
            if any(M.canonical_key == key for M in cls.members):
                return i
        raise KeyError(f"graph {G!r} is not an element of this poset")

    def _index(self, x) -> int:
        return self.index_of(x) if isinstance(x, Graph) else int(x)

    def le(self, x, y) -> bool:
        return bool(self.leq[self._index(x), self._index(y)])

    def comparable(self, x, y) -> bool:
        i, j = self._index(x), self._index(y)
        return bool(self.leq[i, j] or self.leq[j, i])

    def collisions(self) -> list[CsfClass]:
        """Classes holding more than one isomorphism class."""
        return [c for c in self.elements if len(c.members) > 1]


def _assert_axioms(leq: np.ndarray):
    k = len(leq)
    if not leq.diagonal().all():
        raise PosetAxiomError("relation is not reflexive")
    both = leq & leq.T & ~np.eye(k, dtype=bool)
    if both.any():
        i, j = map(int, np.argwhere(both)[0])
        raise PosetAxiomError(f"antisymmetry fails for elements {i} and {j}")
    m = leq.astype(np.float64)
    through = (m @ m) > 0
    bad = through & ~leq
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise PosetAxiomError(f"transitivity fails for elements {i} and {j}")


def relation_matrix(vectors: np.ndarray, anchors: np.ndarray) -> np.ndarray:
    """``leq[j, i]`` iff ``anchors[j] * v_i - anchors[i] * v_j >= 0`` entrywise."""
    k = len(anchors)
    bound = int(np.abs(vectors).max(initial=0)) * int(anchors.max(initial=0))
    if 2 * bound >= 2 ** 62:
        raise OverflowError("coefficients too large for int64 relation test")
    leq = np.zeros((k, k), dtype=bool)
    for i in range(k):
        diff = anchors[:, None] * vectors[i][None, :] - anchors[i] * vectors
        leq[:, i] = (diff >= 0).all(axis=1)
    return leq


def build_poset(n: int, order, jobs: int = 1, classes: list[CsfClass] | None = None) -> ChromaticPoset:
    order = Order.of(order)
    if classes is None:
        classes = csf_classes(n, jobs)
    anchor = order.anchor(n)
    expansions = [c.csf.to(order.basis) for c in classes]
    vectors = np.array([_integer_vector(X) for X in expansions], dtype=np.int64)
    anchors = np.array([int(X[anchor]) for X in expansions], dtype=np.int64)
    assert (anchors > 0).all(), "anchor coefficients must be positive"
    leq = relation_matrix(vectors, anchors)
    _assert_axioms(leq)
    return ChromaticPoset(order, n, tuple(classes), leq)


def hasse_edges(P: ChromaticPoset) -> list[tuple[int, int]]:
    """Cover pairs (x, y) with x < y."""
    lt = P.lt
    m = lt.astype(np.float64)
    covers = lt & ~((m @ m) > 0)
    return [(int(i), int(j)) for i, j in np.argwhere(covers)]


def _mobius_row(P: ChromaticPoset, x: int) -> dict[int, int]:
    row = P._mobius_rows.get(x)
    if row is not None:
        return row
    above = [z for z in range(len(P)) if P.leq[x, z]]
    # number of elements below is a linear extension
    above.sort(key=lambda z: int(P.leq[:, z].sum()))
    row = {}
    for y in above:
        row[y] = 1 if y == x else -sum(v for z, v in row.items() if P.leq[z, y])
    P._mobius_rows[x] = row
    return row


def mobius(P: ChromaticPoset, x, y) -> int:
    i, j = P._index(x), P._index(y)
    return _mobius_row(P, i).get(j, 0)


def maximal_elements(P: ChromaticPoset) -> list[int]:
    lt = P.lt
    return [i for i in range(len(P)) if not lt[i].any()]


def minimal_elements(P: ChromaticPoset) -> list[int]:
    lt = P.lt
    return [i for i in range(len(P)) if not lt[:, i].any()]


def independent_elements(P: ChromaticPoset) -> list[int]:
    lt = P.lt
    return [i for i in range(len(P)) if not lt[i].any() and not lt[:, i].any()]


def verify_antichain(P: ChromaticPoset, elements) -> bool:
    idx = sorted({P._index(x) for x in elements})
    return not any(P.comparable(a, b) for pos, a in enumerate(idx) for b in idx[pos + 1:])


def verify_statistic_monotonicity(P: ChromaticPoset) -> CheckReport:
    """Along every strict relation H < G: alpha(G) >= alpha(H), chi(G) <= chi(H),
    and S(G,1) (e-order) or the acyclic orientation count (s-order) drops."""
    stats = []
    for c in P.elements:
        G = c.representative
        stats.append({
            "alpha": independence_number(G),
            "chi": chromatic_number(G),
            "sinks1": c.e_top,
            "acyclic": c.s_bottom,
        })
    strict_key = "sinks1" if P.order is Order.E else "acyclic"
    bad = []
    pairs = 0
    for lo, hi in np.argwhere(P.lt):
        pairs += 1
        a, b = stats[lo], stats[hi]
        problems = []
        if b["alpha"] < a["alpha"]:
            problems.append("alpha")
        if b["chi"] > a["chi"]:
            problems.append("chi")
        if b[strict_key] >= a[strict_key]:
            problems.append(strict_key)
        if problems:
            bad.append({
                "lower": P.elements[lo].graph6,
                "upper": P.elements[hi].graph6,
                "failed": problems,
            })
    return CheckReport("monotonicity", not bad, P.order.value, P.n, bad, {"pairs": pairs})


# -- lollipops and unit interval graphs --------------------------------------

def lollipop_chain_check(N: int, order) -> CheckReport:
    """L_{m-1,n+1} >= L_{m,n} along the whole family on N vertices, with P_N on
    top and K_N at the bottom. In the e-order also checks the closed form of
    each consecutive weighted difference."""
    order = Order.of(order)
    if not 3 <= N <= 8:
        raise ValueError("lollipop chain check supports 3 <= N <= 8")
    chain = [make_lollipop(m, N - m) for m in range(1, N + 1)]
    bad = []
    for a in range(len(chain)):
        for b in range(a + 1, len(chain)):
            if not related(chain[a], chain[b], order):
                bad.append({"upper": f"L{a + 1},{N - a - 1}", "lower": f"L{b + 1},{N - b - 1}"})
    if order is Order.E:
        for m in range(3, N + 1):
            n = N - m
            lhs = weighted_difference(make_lollipop(m - 1, n + 1), make_lollipop(m, n), order)
            rhs = Fraction(m - 2, m - 1) * multiply(
                csf_stable_partition(make_complete(m - 1)).to(Basis.E),
                csf_stable_partition(make_path(n + 1)).to(Basis.E),
            )
            if lhs != rhs:
                bad.append({"identity": f"m={m},n={n}", "difference": lhs.render()})
    top = make_path(N)
    bottom = make_complete(N)
    if chain[0] != top or chain[-1] != bottom:
        bad.append({"endpoints": "chain does not run from P_N to K_N"})
    distinct = len({G.canonical_key for G in chain})
    return CheckReport("lollipop-chain", not bad, order.value, N, bad, {"distinct_elements": distinct})


def conjecture_move(mseq) -> tuple[int, ...] | None:
    """Add one to every entry up to the first strict increase; None if constant."""
    mseq = tuple(mseq)
    for r in range(len(mseq) - 1):
        if mseq[r] < mseq[r + 1]:
            return tuple(x + 1 for x in mseq[:r + 1]) + mseq[r + 1:]
    return None


def conjecture_check(n: int, orders=(Order.E, Order.S)) -> CheckReport:
    """Test G >= G' for every connected unit interval graph G and its move G'."""
    if not POSET_MIN_N <= n <= POSET_MAX_N:
        raise ValueError(f"conjecture check supports {POSET_MIN_N} <= n <= {POSET_MAX_N}")
    orders = [Order.of(o) for o in orders]
    seen = set()
    bad = []
    skipped = 0
    for mseq in unit_interval_sequences(n, connected=True):
        moved = conjecture_move(mseq)
        if moved is None:
            skipped += 1
            continue
        G, Gp = make_unit_interval(mseq), make_unit_interval(moved)
        pair = (G.canonical_key, Gp.canonical_key)
        if pair in seen:
            continue
        seen.add(pair)
        for order in orders:
            if not related(G, Gp, order):
                bad.append({"m": list(mseq), "m_prime": list(moved), "order": order.value,
                            "graph": G.graph6(), "moved": Gp.graph6()})
    label = "".join(o.value for o in orders)
    return CheckReport("conjecture", not bad, label, n, bad,
                       {"pairs": len(seen), "complete_skipped": skipped})


# -- export -------------------------------------------------------------------

def to_dot(P: ChromaticPoset, annotate: bool = False) -> str:
    lines = [f'digraph "{P.order.value}_{P.n}" {{', "  rankdir=BT;"]
    for i, c in enumerate(P.elements):
        label = c.graph6
        if annotate:
            G = c.representative
            label += (f"\\nalpha={independence_number(G)} chi={chromatic_number(G)}"
                      f" e_top={c.e_top}")
        lines.append(f'  n{i} [label="{label}"];')
    for lo, hi in hasse_edges(P):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(P: ChromaticPoset) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = [c.graph6 for c in P.elements]
    writer.writerow(["leq"] + names)
    for i, name in enumerate(names):
        writer.writerow([name] + [int(v) for v in P.leq[i]])
    return buf.getvalue()


def to_json(P: ChromaticPoset) -> str:
    data = {
        "order": P.order.value,
        "n": P.n,
        "elements": [
            {
                "index": i,
                "graph6": c.graph6,
                "members": [M.graph6() for M in c.members],
                "e_top": c.e_top,
                "s_bottom": c.s_bottom,
                "csf": c.csf.to_json_dict(),
            }
            for i, c in enumerate(P.elements)
        ],
        "covers": hasse_edges(P),
    }
    return json.dumps(data, indent=2) + "\n"

"""Named verification suites, each a list of CheckReports at desk-scale bounds."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod

from .chromposet import (
    CheckReport,
    Order,
    build_poset,
    conjecture_check,
    csf_classes,
    independent_elements,
    lollipop_chain_check,
    maximal_elements,
    minimal_elements,
    related,
    verify_antichain,
    verify_statistic_monotonicity,
    weighted_difference,
)
from .graph import (
    Graph,
    bond_lattice_mobius,
    csf,
    csf_bond_lattice,
    csf_power_sum,
    csf_stable_partition,
    e_top_coefficient,
    enumerate_connected,
    make_complete,
    make_cycle,
    make_lollipop,
    make_path,
    make_star,
    make_unit_interval,
    s_bottom_coefficient,
    sink_profile,
    unit_interval_sequences,
)
from .partition import Partition, partitions_of
from .ptab import gasharov_count, verify_injection_all
from .symfunc import (
    Basis,
    SymFunc,
    is_nonneg_in,
    jacobi_trudi_s_in_e,
    multiply,
    newton_p_in_e,
    transition,
)

__all__ = ["SUITES", "run_suite", "DIAMOND", "FIGURE_G1", "FIGURE_G2"]

DIAMOND = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
# 4-cycle 0-1-2-3 with a path 2-4-5-6 hanging off it
FIGURE_G1 = Graph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (4, 5), (5, 6)])
FIGURE_G2 = make_cycle(7)


def _report(check, bad, order=None, n=None, **details) -> CheckReport:
    return CheckReport(check, not bad, order, n, bad, details)


def _orders(order) -> list[Order]:
    return [Order.E, Order.S] if order in (None, "both") else [Order.of(order)]


def _trees(n: int) -> list[Graph]:
    return [G for G in enumerate_connected(n) if G.is_tree()]


# -- bases --------------------------------------------------------------------

def bases(n: int = 8) -> list[CheckReport]:
    reports = []
    bad = []
    for k in range(1, n + 1):
        for a in Basis:
            for b in Basis:
                there, back = transition(k, a, b), transition(k, b, a)
                prod_ = there @ back
                idx = prod_.index
                for x in idx:
                    for y in idx:
                        if prod_[x, y] != (1 if x == y else 0):
                            bad.append({"n": k, "route": f"{a.value}->{b.value}->{a.value}",
                                        "entry": [str(x), str(y)]})
    reports.append(_report("transition-round-trip", bad, n=n))
    bad = []
    for k in range(1, min(n, 7) + 1):
        for lam in partitions_of(k):
            s = SymFunc.basis_element(Basis.S, lam)
            if jacobi_trudi_s_in_e(lam) != s:
                bad.append({"shape": str(lam)})
    reports.append(_report("jacobi-trudi", bad, n=min(n, 7)))
    bad = []
    for k in range(1, min(n, 7) + 1):
        ones = Partition((1,) * k)
        for lam in partitions_of(k):
            c = SymFunc.basis_element(Basis.S, lam).to(Basis.P)[ones]
            if c <= 0:
                bad.append({"shape": str(lam), "coefficient": str(c)})
    reports.append(_report("schur-p-ones-positive", bad, n=min(n, 7)))
    bad = []
    for k in range(1, n + 1):
        if newton_p_in_e(k) != SymFunc.basis_element(Basis.P, (k,)):
            bad.append({"n": k})
    reports.append(_report("newton-identity", bad, n=n))
    return reports


# -- CSF routes ---------------------------------------------------------------

def csf_equivalence(n: int = 6) -> list[CheckReport]:
    bad, signs = [], []
    count = 0
    for k in range(1, n + 1):
        for G in enumerate_connected(k):
            count += 1
            X = csf_stable_partition(G)
            if not (csf_power_sum(G) == X == csf_bond_lattice(G)):
                bad.append({"graph6": G.graph6()})
            if csf_power_sum(G)[Partition((1,) * k)] != 1:
                bad.append({"graph6": G.graph6(), "problem": "p_(1^n) coefficient"})
            for pi, mu in bond_lattice_mobius(G).items():
                if (-1) ** (k - len(pi)) * mu <= 0:
                    signs.append({"graph6": G.graph6(), "partition": list(pi)})
    reports = [_report("three-way-agreement", bad, n=n, graphs=count),
               _report("bond-lattice-sign", signs, n=n)]
    bad = []
    pairs = 0
    for a in range(1, 4):
        for b in range(a, 8 - a):
            for G in enumerate_connected(a):
                for H in enumerate_connected(b):
                    pairs += 1
                    U = G.disjoint_union(H)
                    if csf_stable_partition(U) != multiply(csf(G, "p"), csf(H, "p")):
                        bad.append({"left": G.graph6(), "right": H.graph6()})
    reports.append(_report("multiplicativity", bad, n=7, pairs=pairs))
    return reports


# -- coefficient formulas ----------------------------------------------------

def coefficients(n: int = 7) -> list[CheckReport]:
    reports = []
    bad = []
    for k in range(1, n + 1):
        for T in _trees(k):
            if e_top_coefficient(T) != k or s_bottom_coefficient(T) != 2 ** (k - 1):
                bad.append({"graph6": T.graph6()})
        K = make_complete(k)
        if not e_top_coefficient(K) == s_bottom_coefficient(K) == factorial(k):
            bad.append({"graph6": K.graph6()})
        if csf(K, "e") != factorial(k) * SymFunc.basis_element("e", (k,)):
            bad.append({"graph6": K.graph6(), "problem": "complete graph expansion"})
        for m in range(1, k + 1):
            L = make_lollipop(m, k - m)
            if e_top_coefficient(L) != k * factorial(m - 1):
                bad.append({"lollipop": [m, k - m], "problem": "e_top"})
            if s_bottom_coefficient(L) != 2 ** (k - m) * factorial(m):
                bad.append({"lollipop": [m, k - m], "problem": "s_bottom"})
        for mseq in unit_interval_sequences(k):
            G = make_unit_interval(mseq)
            diffs = [mi - i for i, mi in enumerate(mseq, start=1)]
            if e_top_coefficient(G) != k * prod(diffs):
                bad.append({"m": list(mseq), "problem": "e_top"})
            if s_bottom_coefficient(G) != prod(d + 1 for d in diffs):
                bad.append({"m": list(mseq), "problem": "s_bottom"})
    reports.append(_report("closed-form-coefficients", bad, n=n))

    hook, layers, lower, acyc, bip = [], [], [], [], []
    for k in range(1, n + 1):
        for G in enumerate_connected(k):
            prof = sink_profile(G)
            if k <= 6:
                Xs, Xe = csf(G, "s"), csf(G, "e")
                for h in range(1, k + 1):
                    lam = Partition((h,) + (1,) * (k - h))
                    want = sum(comb(j - 1, h - 1) * prof[j] for j in range(1, k + 1))
                    if Xs[lam] != want:
                        hook.append({"graph6": G.graph6(), "hook": str(lam)})
                for j in range(1, k + 1):
                    total = sum(c for lam, c in Xe.coeffs.items() if lam.length == j)
                    if total != prof[j]:
                        layers.append({"graph6": G.graph6(), "sinks": j})
            e = e_top_coefficient(G)
            if not e >= k * (G.num_edges - k + 2) or e < k or prof[1] != e:
                lower.append({"graph6": G.graph6()})
            if k >= 4 and not G.is_tree():
                if prof.total <= 2 ** (k - 1):
                    acyc.append({"graph6": G.graph6()})
                if not _has_big_bipartition(G):
                    bip.append({"graph6": G.graph6()})
    reports += [
        _report("hook-coefficients", hook, n=min(n, 6)),
        _report("sinks-by-length", layers, n=min(n, 6)),
        _report("e-top-lower-bound", lower, n=n),
        _report("non-tree-acyclic-bound", acyc, n=n),
        _report("non-tree-bipartition", bip, n=n),
    ]

    bad = []
    for total in range(2, 9):
        for m in range(2, total + 1):
            nn = total - m
            lhs = csf(make_lollipop(m, nn), "p")
            rhs = (m - 1) * csf(make_lollipop(m - 1, nn + 1), "p")
            if m > 2:
                rhs = rhs - (m - 2) * multiply(csf(make_complete(m - 1), "p"), csf(make_path(nn + 1), "p"))
            if lhs != rhs:
                bad.append({"lollipop": [m, nn]})
    reports.append(_report("lollipop-recurrence", bad, n=8))

    bad = []
    for k in range(4, 9):
        X = csf(make_star(k), "e")
        for lam in partitions_of(k):
            if lam.length == 2 and lam[1] >= 2:
                want = Fraction(-k, 2) if lam[0] == lam[1] else -k
                if X[lam] != want:
                    bad.append({"n": k, "shape": str(lam), "found": str(X[lam])})
    reports.append(_report("star-coefficients", bad, n=8))

    bad = []
    for k in range(4, min(n, 6) + 1):
        for G in enumerate_connected(k):
            Xm, Xs = csf(G, "m"), csf(G, "s")
            if Xs[(k - 2, 2)] != Xm[(k - 2, 2)] - Xm[(k - 1, 1)]:
                bad.append({"graph6": G.graph6()})
    reports.append(_report("two-row-schur", bad, n=min(n, 6)))
    return reports


def _has_big_bipartition(G: Graph) -> bool:
    full = (1 << G.n) - 1
    for mask in range(1, full):
        rest = full & ~mask
        if (bin(mask).count("1") >= 2 and bin(rest).count("1") >= 2
                and G.induced_is_connected(mask) and G.induced_is_connected(rest)):
            return True
    return False


# -- poset suites -------------------------------------------------------------

def _posets(n: int, order):
    classes = csf_classes(n)
    return [build_poset(n, o, classes=classes) for o in _orders(order)]


def minmax(n: int = 6, order=None) -> list[CheckReport]:
    reports = []
    for P in _posets(n, order):
        bad = []
        if P.index_of(make_complete(n)) not in minimal_elements(P):
            bad.append({"graph6": make_complete(n).graph6(), "problem": "not minimal"})
        maxima = set(maximal_elements(P))
        for T in _trees(n):
            if P.index_of(T) not in maxima:
                bad.append({"graph6": T.graph6(), "problem": "tree not maximal"})
        # G >= K_n exactly when G is positive in the order's basis
        for c in P.elements:
            positive = is_nonneg_in(c.csf, P.order.basis)
            if positive != P.le(P.index_of(make_complete(n)), c.representative):
                bad.append({"graph6": c.graph6, "problem": "complete-graph criterion"})
        reports.append(_report("minmax", bad, P.order.value, n))
    return reports


def antichains(n: int = 6, order=None) -> list[CheckReport]:
    reports = []
    for P in _posets(n, order):
        bad = []
        if not verify_antichain(P, _trees(n)):
            bad.append({"problem": "trees are not an antichain"})
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(P.elements):
            groups.setdefault(c.e_top if P.order is Order.E else c.s_bottom, []).append(i)
        for value, members in groups.items():
            if len(members) > 1 and not verify_antichain(P, members):
                bad.append({"anchor": value, "problem": "equal anchor coefficients comparable"})
        for a, b in combinations(P.elements, 2):
            diff = a.csf - b.csf
            if is_nonneg_in(diff, P.order.basis) or is_nonneg_in(-diff, P.order.basis):
                bad.append({"pair": [a.graph6, b.graph6], "problem": "plain difference positive"})
        reports.append(_report("antichains", bad, P.order.value, n))
    return reports


def stars(n: int = 6) -> list[CheckReport]:
    reports = []
    for P in _posets(n, None):
        S = P.index_of(make_star(n))
        bad = [] if S in independent_elements(P) else [{"graph6": make_star(n).graph6()}]
        reports.append(_report("stars", bad, P.order.value, n))
    return reports


def monotonicity(n: int = 6, order=None) -> list[CheckReport]:
    return [verify_statistic_monotonicity(P) for P in _posets(n, order)]


def separation() -> list[CheckReport]:
    bad = []
    C4 = make_cycle(4)
    if related(C4, DIAMOND, "e") or related(DIAMOND, C4, "e"):
        bad.append({"pair": ["C4", "diamond"], "problem": "comparable in the e-order"})
    if not related(C4, DIAMOND, "s") or related(DIAMOND, C4, "s"):
        bad.append({"pair": ["C4", "diamond"], "problem": "diamond < C4 missing in the s-order"})
    if not related(FIGURE_G1, FIGURE_G2, "e"):
        bad.append({"pair": ["G1", "G2"], "problem": "G1 >= G2 missing in the e-order"})
    c = weighted_difference(FIGURE_G1, FIGURE_G2, "s")[(2, 2, 2, 1)]
    if c >= 0:
        bad.append({"pair": ["G1", "G2"], "problem": f"s_(2,2,2,1) coefficient {c} not negative"})
    reports = [_report("cross-order-separation", bad)]
    bad = []
    for k in range(2, 8):
        for T1, T2 in combinations(_trees(k), 2):
            for a, b in ((T1, T2), (T2, T1)):
                if related(a, b, "e") and not related(a, b, "s"):
                    bad.append({"upper": a.graph6(), "lower": b.graph6()})
    reports.append(_report("tree-e-implies-s", bad, n=7))
    return reports


def lollipop_chain(N: int = 8, order=None) -> list[CheckReport]:
    return [lollipop_chain_check(N, o) for o in _orders(order)]


def ptableau(N: int = 8) -> list[CheckReport]:
    bad = []
    for total in range(1, N + 1):
        for m in range(1, total + 1):
            X = csf(make_lollipop(m, total - m), "s")
            for lam in partitions_of(total):
                got = gasharov_count(lam, m, total - m)
                if got != X[lam]:
                    bad.append({"lollipop": [m, total - m], "shape": str(lam),
                                "tableaux": got, "coefficient": str(X[lam])})
    return [_report("gasharov", bad, n=N)]


def injection(N: int = 8) -> list[CheckReport]:
    reports = []
    for total in range(3, N + 1):
        results = verify_injection_all(total)
        bad = [r.to_json_dict() for r in results if not r.passed]
        case3 = sum(r.case_counts[3] for r in results)
        reports.append(_report("injection", bad, n=total, shapes=len(results), case3_inputs=case3))
    return reports


def conjecture(n: int = 7) -> list[CheckReport]:
    return [conjecture_check(k) for k in range(2, n + 1)]


SUITES = {
    "bases": (bases, ("n",)),
    "csf-equivalence": (csf_equivalence, ("n",)),
    "coefficients": (coefficients, ("n",)),
    "minmax": (minmax, ("n", "order")),
    "antichains": (antichains, ("n", "order")),
    "stars": (stars, ("n",)),
    "monotonicity": (monotonicity, ("n", "order")),
    "separation": (separation, ()),
    "lollipop-chain": (lollipop_chain, ("N", "order")),
    "ptableau": (ptableau, ("N",)),
    "injection": (injection, ("N",)),
    "conjecture": (conjecture, ("n",)),
}

# upper bounds accepted for each suite's size parameter
BOUNDS = {
    "bases": 8, "csf-equivalence": 6, "coefficients": 7, "minmax": 7, "antichains": 7,
    "stars": 7, "monotonicity": 7, "lollipop-chain": 8, "ptableau": 8, "injection": 8,
    "conjecture": 7,
}
LOWER_BOUNDS = {"stars": 4, "lollipop-chain": 3, "injection": 3, "minmax": 2,
                "antichains": 2, "monotonicity": 2, "conjecture": 2}


def run_suite(name: str, n: int | None = None, order=None) -> list[CheckReport]:
    func, params = SUITES[name]
    kwargs = {}
    if n is not None and params:
        kwargs[params[0]] = n
    if order is not None and "order" in params:
        kwargs["order"] = order
    return func(**kwargs)

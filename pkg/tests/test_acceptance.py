"""Acceptance criteria 1-10. Each test carries ``criterion(k)``; the terminal
summary prints one PASS/FAIL line per criterion."""

import time
from fractions import Fraction
from math import factorial, prod

import pytest

from chromaposet.chromposet import (
    build_poset,
    conjecture_check,
    independent_elements,
    lollipop_chain_check,
    maximal_elements,
    minimal_elements,
    related,
    verify_antichain,
    verify_statistic_monotonicity,
    weighted_difference,
)
from chromaposet.graph import (
    csf,
    csf_bond_lattice,
    csf_power_sum,
    csf_stable_partition,
    enumerate_connected,
    make_complete,
    make_cycle,
    make_lollipop,
    make_path,
    make_star,
    make_unit_interval,
    unit_interval_sequences,
)
from chromaposet.partition import Partition, partitions_of
from chromaposet.ptab import PTableau, f_lambda, gasharov_count, recover_case3, verify_injection_all
from chromaposet.suites import DIAMOND, FIGURE_G1, FIGURE_G2
from chromaposet.symfunc import Basis, SymFunc, jacobi_trudi_s_in_e, transition


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.1f}s, limit {self.limit}s"


def s(*parts):
    return Partition(parts)


# -- 1 ------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_small_expansions():
    with Timer(1):
        P3 = csf(make_path(3))
        assert P3 == SymFunc(3, "m", {(2, 1): 1, (1, 1, 1): 6})
        assert P3.to("p").coeffs == {s(3): 1, s(2, 1): -2, s(1, 1, 1): 1}
        for n in range(1, 8):
            X = csf(make_complete(n))
            assert X.to("e").coeffs == {s(n): factorial(n)}
            assert X.to("s").coeffs == {Partition((1,) * n): factorial(n)}


# -- 2 ------------------------------------------------------------------------

# Published expansions; two printed Schur shapes in G1 are typos and appear here
# as (3,1,1,1,1) and (4,2,1), the only readings of the right weight.
FIGURE_EXPANSIONS = {
    "D": (DIAMOND, {(4,): 16, (3, 1): 2},
          {(1, 1, 1, 1): 18, (2, 1, 1): 2}),
    "C4": (make_cycle(4), {(4,): 12, (2, 2): 2},
           {(1, 1, 1, 1): 14, (2, 1, 1): 2, (2, 2): 2}),
    "G1": (FIGURE_G1,
           {(7,): 21, (6, 1): 15, (5, 2): 29, (4, 3): 27, (4, 2, 1): 12, (3, 2, 2): 7,
            (2, 2, 2, 1): 1},
           {(1,) * 7: 112, (2, 1, 1, 1, 1, 1): 112, (2, 2, 1, 1, 1): 106, (2, 2, 2, 1): 57,
            (3, 1, 1, 1, 1): 22, (3, 2, 2): 10, (3, 2, 1, 1): 32, (3, 3, 1): 10,
            (4, 1, 1, 1): 1, (4, 2, 1): 2, (4, 3): 1}),
    "G2": (FIGURE_G2, {(7,): 42, (5, 2): 28, (4, 3): 42, (3, 2, 2): 14},
           {(1,) * 7: 126, (2, 1, 1, 1, 1, 1): 98, (2, 2, 1, 1, 1): 112, (2, 2, 2, 1): 70,
            (3, 1, 1, 1, 1): 14, (3, 2, 1, 1): 28, (3, 2, 2): 14, (3, 3, 1): 14}),
}


@pytest.mark.criterion(2)
@pytest.mark.parametrize("name", list(FIGURE_EXPANSIONS))
def test_figure_expansions(name):
    with Timer(5):
        G, e_terms, s_terms = FIGURE_EXPANSIONS[name]
        X = csf(G)
        assert X.to("e").coeffs == {Partition(k): v for k, v in e_terms.items()}
        assert X.to("s").coeffs == {Partition(k): v for k, v in s_terms.items()}


# -- 3 ------------------------------------------------------------------------

def top_and_bottom(G):
    """Read both coefficients from the symmetric function expansions."""
    X = csf_stable_partition(G)
    return X.to("e")[(G.n,)], X.to("s")[(1,) * G.n]


@pytest.mark.criterion(3)
def test_coefficient_formulas():
    with Timer(120):
        for n in range(1, 8):
            for G in enumerate_connected(n):
                if G.is_tree():
                    assert top_and_bottom(G) == (n, 2 ** (n - 1))
            assert top_and_bottom(make_complete(n)) == (factorial(n), factorial(n))
            for m in range(1, n + 1):
                k = n - m
                assert top_and_bottom(make_lollipop(m, k)) == (n * factorial(m - 1), 2 ** k * factorial(m))
            for mseq in unit_interval_sequences(n):
                G = make_unit_interval(mseq)
                e_top = n * prod(mi - i for i, mi in enumerate(mseq, start=1))
                s_bottom = prod(mi - i + 1 for i, mi in enumerate(mseq, start=1))
                assert top_and_bottom(G) == (e_top, s_bottom), mseq


# -- 4 ------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_three_csf_routes():
    with Timer(120):
        counts = []
        for n in range(1, 7):
            graphs = enumerate_connected(n)
            counts.append(len(graphs))
            for G in graphs:
                X = csf_stable_partition(G)
                assert csf_power_sum(G, "subsets") == X
                assert csf_bond_lattice(G) == X
        assert counts[-1] == 112


# -- 5 ------------------------------------------------------------------------

def check_poset_theorems(n, order):
    P = build_poset(n, order)
    bottom = P.index_of(make_complete(n))
    assert bottom in minimal_elements(P)
    assert not P.lt[:, bottom].any()
    trees = sorted({P.index_of(G) for G in enumerate_connected(n) if G.is_tree()})
    assert set(trees) <= set(maximal_elements(P))
    assert verify_antichain(P, trees)
    if n >= 4:
        assert P.index_of(make_star(n)) in independent_elements(P)
    report = verify_statistic_monotonicity(P)
    assert report.passed, report.counterexamples


@pytest.mark.criterion(5)
@pytest.mark.parametrize("order", ["e", "s"])
@pytest.mark.parametrize("n", range(2, 7))
def test_poset_theorems(n, order):
    with Timer(600):
        check_poset_theorems(n, order)


@pytest.mark.criterion(5)
@pytest.mark.slow
@pytest.mark.parametrize("order", ["e", "s"])
def test_poset_theorems_n7(order):
    with Timer(600):
        check_poset_theorems(7, order)


# -- 6 ------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_cross_order_separation():
    C4 = make_cycle(4)
    assert not related(C4, DIAMOND, "e") and not related(DIAMOND, C4, "e")
    assert related(C4, DIAMOND, "s") and not related(DIAMOND, C4, "s")
    E4, S4 = build_poset(4, "e"), build_poset(4, "s")
    assert not E4.comparable(C4, DIAMOND)
    assert S4.le(DIAMOND, C4)
    assert related(FIGURE_G1, FIGURE_G2, "e") and not related(FIGURE_G2, FIGURE_G1, "e")
    coefficient = weighted_difference(FIGURE_G1, FIGURE_G2, "s")[(2, 2, 2, 1)]
    assert coefficient < 0
    assert coefficient == 57 - Fraction(112, 126) * 70


# -- 7 ------------------------------------------------------------------------

@pytest.mark.criterion(7)
@pytest.mark.parametrize("order", ["e", "s"])
def test_lollipop_chains(order):
    with Timer(300):
        for N in range(3, 9):
            report = lollipop_chain_check(N, order)
            assert report.passed, report.counterexamples
            assert report.details["distinct_elements"] == N - 1


# -- 8 ------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_tableau_counts():
    with Timer(600):
        for N in range(1, 9):
            for m in range(1, N + 1):
                X = csf(make_lollipop(m, N - m), "s")
                for lam in partitions_of(N):
                    assert gasharov_count(lam, m, N - m) == X[lam]


@pytest.mark.criterion(8)
def test_injection():
    with Timer(600):
        for N in range(3, 9):
            for report in verify_injection_all(N):
                assert report.passed, report.to_json_dict()
                assert report.inequality_holds


@pytest.mark.criterion(8)
def test_injection_fixtures():
    cases = [
        (2, "C B2 / A3 B1 / A1 B3 / A2", 3, 4, 4, "C B2 / A3 B1 / A1 B3 / A2"),
        (1, "C B2 / A2 B1 / A1 B3 / A3", 3, 4, 2, "C B2 / A3 B1 / A1 B3 / A2"),
        (2, "A2 B6 B9 B12 / B2 B5 B8 / B1 B4 B7 / C B3 B11 / A1 B10 / A3", 3, 13, 1,
         "A2 B4 B7 B12 / A1 B3 B9 / A3 B6 B8 / B2 B5 B11 / B1 B10 / C"),
    ]
    for k, before, m, n, j, after in cases:
        T = PTableau.parse(before)
        assert f_lambda(k, T, m, n) == (j, PTableau.parse(after))
    assert recover_case3(1, PTableau.parse(cases[2][5]), 3) == PTableau.parse(cases[2][1])


# -- 9 ------------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_unit_interval_moves():
    with Timer(900):
        for n in range(2, 8):
            report = conjecture_check(n)
            assert report.passed, report.counterexamples


# -- 10 -----------------------------------------------------------------------

@pytest.mark.criterion(10)
def test_basis_conversions():
    with Timer(60):
        for n in range(1, 9):
            k = len(partitions_of(n))
            ident = tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k))
            for a in Basis:
                for b in Basis:
                    assert (transition(n, a, b) @ transition(n, b, a)).entries == ident
        for n in range(1, 8):
            ones = Partition((1,) * n)
            for lam in partitions_of(n):
                S = SymFunc.basis_element("s", lam)
                assert jacobi_trudi_s_in_e(lam) == S
                assert S.to("p")[ones] > 0

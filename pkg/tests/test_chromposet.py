import csv
import io
import json
from fractions import Fraction

import numpy as np
import pytest

from chromaposet.chromposet import (
    ChromaticPoset,
    CsfClass,
    Order,
    PosetAxiomError,
    build_poset,
    conjecture_check,
    conjecture_move,
    csf_classes,
    hasse_edges,
    independent_elements,
    lollipop_chain_check,
    maximal_elements,
    minimal_elements,
    mobius,
    related,
    to_csv,
    to_dot,
    to_json,
    verify_antichain,
    verify_statistic_monotonicity,
    weighted_difference,
)
from chromaposet.graph import Graph, make_complete, make_cycle, make_path, make_star
from chromaposet.suites import DIAMOND
from chromaposet.symfunc import exact_inverse

PAW = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
NAMED4 = {"K4": make_complete(4), "C4": make_cycle(4), "D": DIAMOND,
          "paw": PAW, "P4": make_path(4), "claw": make_star(4)}


@pytest.fixture(scope="module", params=["e", "s"])
def poset5(request):
    return build_poset(5, request.param)


def named_covers(P):
    name = {P.index_of(G): k for k, G in NAMED4.items()}
    return {(name[a], name[b]) for a, b in hasse_edges(P)}


# Cover relations on four vertices, transcribed from the published Hasse diagrams.
def test_e_poset_on_four_vertices():
    P = build_poset(4, "e")
    assert len(P) == 6
    assert named_covers(P) == {("K4", "C4"), ("K4", "D"), ("D", "paw"), ("C4", "P4"), ("paw", "P4")}
    assert independent_elements(P) == [P.index_of(NAMED4["claw"])]


def test_s_poset_on_four_vertices():
    P = build_poset(4, "s")
    assert named_covers(P) == {("K4", "D"), ("D", "C4"), ("D", "paw"), ("C4", "P4"), ("paw", "P4")}
    assert independent_elements(P) == [P.index_of(NAMED4["claw"])]


def test_vectorised_relation_matches_exact_test(poset5):
    reps = [c.representative for c in poset5.elements]
    for i, G in enumerate(reps):
        for j, H in enumerate(reps):
            assert poset5.leq[j, i] == related(G, H, poset5.order)


def test_weighted_difference_kills_anchor(poset5):
    reps = [c.representative for c in poset5.elements]
    anchor = poset5.order.anchor(5)
    for G in reps[::4]:
        for H in reps[::3]:
            assert weighted_difference(G, H, poset5.order)[anchor] == 0


def test_mobius_is_inverse_of_zeta(poset5):
    zeta = poset5.leq.astype(int).tolist()
    inv = exact_inverse(zeta)
    for x in range(len(poset5)):
        for y in range(len(poset5)):
            assert mobius(poset5, x, y) == inv[x][y]


def test_mobius_on_covers(poset5):
    for a, b in hasse_edges(poset5):
        assert mobius(poset5, a, b) == -1


def test_extremes(poset5):
    P = poset5
    assert maximal_elements(P) == [i for i in range(len(P)) if not P.lt[i].any()]
    top = P.index_of(make_path(5))
    bottom = P.index_of(make_complete(5))
    assert top in maximal_elements(P)
    assert bottom in minimal_elements(P)
    assert all(P.le(bottom, G) for G in (make_path(5), make_cycle(5)))
    assert set(independent_elements(P)) <= set(maximal_elements(P)) & set(minimal_elements(P))


def test_antichain_helper(poset5):
    P = poset5
    assert verify_antichain(P, maximal_elements(P))
    assert not verify_antichain(P, [make_path(5), make_complete(5)])


def synthetic(leq):
    leq = np.array(leq, dtype=bool)
    return ChromaticPoset(Order.E, 0, (None,) * len(leq), leq)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_hasse_of_chain_and_antichain(k):
    chain = synthetic([[i <= j for j in range(k)] for i in range(k)])
    assert hasse_edges(chain) == [(i, i + 1) for i in range(k - 1)]
    anti = synthetic(np.eye(k))
    assert hasse_edges(anti) == []
    assert mobius(chain, 0, k - 1) == (1 if k == 1 else -1 if k == 2 else 0)


def test_axiom_violation_is_reported():
    C = csf_classes(4)[0]
    twin = CsfClass(C.representative, C.members, 2 * C.csf, 2 * C.e_top, 2 * C.s_bottom)
    with pytest.raises(PosetAxiomError):
        build_poset(4, "e", classes=[C, twin])


def test_collisions_and_sizes():
    assert len(build_poset(2, "e")) == 1
    assert [len(csf_classes(n)) for n in (3, 4, 5)] == [2, 6, 20]
    P = build_poset(5, "e")
    (c,) = P.collisions()
    assert len(c.members) == 2
    assert c.members[0].num_edges == c.members[1].num_edges


def test_disconnected_and_mismatched_graphs_rejected():
    with pytest.raises(ValueError, match="connected"):
        related(Graph(3, [(0, 1)]), make_path(3), "e")
    with pytest.raises(ValueError, match="vertex counts"):
        related(make_path(3), make_path(4), "s")
    with pytest.raises(ValueError):
        csf_classes(8)


def test_exports_round_trip(poset5):
    P = poset5
    rows = list(csv.reader(io.StringIO(to_csv(P))))
    assert len(rows) == len(P) + 1
    assert np.array_equal(np.array([[int(x) for x in r[1:]] for r in rows[1:]], dtype=bool), P.leq)
    data = json.loads(to_json(P))
    assert [tuple(e) for e in data["covers"]] == hasse_edges(P)
    assert len(data["elements"]) == len(P)
    dot = to_dot(P, annotate=True)
    assert dot.count("->") == len(hasse_edges(P))
    assert "alpha=" in dot


def test_monotonicity(poset5):
    assert verify_statistic_monotonicity(poset5).passed


@pytest.mark.parametrize("N", range(3, 8))
@pytest.mark.parametrize("order", ["e", "s"])
def test_lollipop_chain(N, order):
    report = lollipop_chain_check(N, order)
    assert report.passed, report.counterexamples
    assert report.details["distinct_elements"] == N - 1


def test_conjecture_move():
    assert conjecture_move((2, 3, 4)) == (3, 3, 4)
    assert conjecture_move((2, 2, 4, 4)) == (3, 3, 4, 4)
    assert conjecture_move((4, 4, 4)) is None


@pytest.mark.parametrize("n", range(3, 7))
def test_conjecture_small(n):
    report = conjecture_check(n)
    assert report.passed, report.counterexamples


def test_order_parsing():
    assert Order.of("E") is Order.E
    with pytest.raises(ValueError):
        Order.of("x")
    assert Fraction(1) == 1

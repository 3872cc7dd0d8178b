import itertools
from fractions import Fraction

import networkx as nx
import pytest

from interlace.clique import CircularCliqueSpec, ReducedFraction
from interlace.graph import InterlacingGraph, build_graph
from interlace.oracles import (
    CapExceeded,
    candidate_fractions,
    check_homomorphism,
    check_independent_set,
    check_proper_coloring,
    chromatic_number,
    circular_chromatic_number,
    has_homomorphism,
    max_independent_set,
)
from interlace.polygon import Parameters

from conftest import valid_params


def G_of(*t):
    return build_graph(Parameters(*t))


def nx_graph(G):
    H = nx.Graph()
    H.add_nodes_from(range(len(G)))
    H.add_edges_from(G.edges())
    return H


def brute_chi(G):
    V = len(G)
    edges = G.edges()
    for c in range(1, V + 1):
        for col in itertools.product(range(c), repeat=V):
            if all(col[u] != col[v] for u, v in edges):
                return c
    return 0


@pytest.mark.parametrize("t,alpha", [((6, 2, 2), 3), ((6, 2, 3), 1), ((8, 3, 2), 6)])
def test_alpha_examples(t, alpha):
    res = max_independent_set(G_of(*t))
    assert res.value == alpha
    assert check_independent_set(G_of(*t), res.witness)


@pytest.mark.parametrize("p", list(valid_params(11, max_k=3)), ids=str)
def test_alpha_matches_networkx(p):
    G = build_graph(p)
    clique, size = nx.max_weight_clique(nx.complement(nx_graph(G)), weight=None)
    assert max_independent_set(G).value == size


@pytest.mark.parametrize("t,chi", [((6, 2, 2), 3), ((7, 2, 2), 4), ((5, 2, 2), 3)])
def test_chi_examples(t, chi):
    G = G_of(*t)
    res = chromatic_number(G)
    assert res.value == chi
    assert check_proper_coloring(G, res.witness)


@pytest.mark.parametrize("t", [(5, 2, 2), (6, 2, 2), (6, 2, 3), (7, 3, 2), (8, 2, 4), (9, 3, 3)])
def test_chi_matches_brute(t):
    G = G_of(*t)
    assert chromatic_number(G).value == brute_chi(G)


def test_homomorphism_examples():
    C5 = G_of(5, 2, 2)
    found, mapping, _ = has_homomorphism(C5, CircularCliqueSpec(5, 2))
    assert found and check_homomorphism(C5, CircularCliqueSpec(5, 2), mapping)
    assert not has_homomorphism(C5, CircularCliqueSpec(7, 3))[0]
    for t in [(6, 2, 2), (7, 2, 2), (8, 3, 2)]:
        G = G_of(*t)
        chi = chromatic_number(G).value
        assert has_homomorphism(G, CircularCliqueSpec(chi, 1))[0]
        assert not has_homomorphism(G, CircularCliqueSpec(chi - 1, 1))[0]


@pytest.mark.parametrize(
    "t,frac", [((5, 2, 2), (5, 2)), ((6, 2, 3), (3, 1)), ((7, 3, 2), (7, 3)), ((6, 2, 2), (3, 1))]
)
def test_circular_chromatic_examples(t, frac):
    G = G_of(*t)
    res = circular_chromatic_number(G)
    assert res.value == ReducedFraction(*frac)
    assert check_homomorphism(G, CircularCliqueSpec(*frac), res.witness)


def test_circular_unknown_when_order_too_small():
    G = G_of(7, 3, 2)
    res = circular_chromatic_number(G, max_order=2)
    assert res.status == "unknown" and res.value is None


def test_candidate_fractions_sorted_and_reduced():
    cands = candidate_fractions(7)
    assert cands == sorted(set(cands))
    assert cands[0] == Fraction(2) and Fraction(7, 3) in cands and Fraction(4, 2) == cands[0]
    assert all(f >= 2 and f.numerator <= 7 for f in cands)


def test_caps_refuse():
    G = G_of(10, 3, 2)
    with pytest.raises(CapExceeded):
        max_independent_set(G, cap=10)
    with pytest.raises(CapExceeded):
        chromatic_number(G, cap=10)
    with pytest.raises(CapExceeded):
        circular_chromatic_number(G, cap=10)
    with pytest.raises(CapExceeded):
        has_homomorphism(G, CircularCliqueSpec(300, 1))


def test_empty_and_edgeless_graphs():
    p = Parameters(4, 2, 2)
    G = InterlacingGraph(p, (), ())
    assert max_independent_set(G).value == 0
    assert chromatic_number(G).value == 0
    H = build_graph(p).induced([0])
    assert circular_chromatic_number(H).value == ReducedFraction(1, 1)


def test_witness_checkers_reject_bad_witnesses():
    G = G_of(5, 2, 2)
    assert not check_independent_set(G, [0, 1, 2])
    assert not check_proper_coloring(G, {v: 0 for v in range(5)})
    assert not check_homomorphism(G, CircularCliqueSpec(5, 2), [0] * 5)


@pytest.mark.parametrize("t", [(5, 2, 2), (6, 2, 2), (7, 3, 2), (8, 3, 2), (8, 2, 3)])
def test_sandwich(t):
    G = G_of(*t)
    a = max_independent_set(G).value
    chi = chromatic_number(G).value
    cc = circular_chromatic_number(G).value
    lower = Fraction(len(G), a)
    assert lower == Fraction(cc.num, cc.den) == Fraction(t[0], t[1])
    assert Fraction(cc.num, cc.den) <= chi


def test_node_budget_refuses():
    G = G_of(10, 3, 2)
    with pytest.raises(CapExceeded):
        max_independent_set(G, node_budget=5)
    with pytest.raises(CapExceeded):
        chromatic_number(G_of(7, 2, 2), node_budget=1)
    with pytest.raises(CapExceeded):
        circular_chromatic_number(G_of(8, 3, 2), node_budget=3)
    with pytest.raises(CapExceeded):
        has_homomorphism(G_of(7, 2, 2), CircularCliqueSpec(10, 3), node_budget=2)

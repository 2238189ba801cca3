import math

import numpy as np
import pytest

from conftest import random_graph
from kcut.bounds import (
    SrgParameters,
    chromatic_lower_bound,
    complete_graph_maxkcut,
    eigenvalue_bound,
    hoffman_bound,
    maxkcut_feasibility_flag,
    srg_sdp_bound,
)
from kcut.graphs import Graph, named_graph
from kcut.oracle import WorkCapExceeded, brute_force_maxkcut
from kcut.spectra import lambda_max

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def k100_minus_edge():
    W = 1.0 - np.eye(100)
    W[0, 1] = W[1, 0] = 0.0
    return Graph(n=100, weights=W, name="K_100 - e")


def test_eigenvalue_bound_examples():
    assert abs(eigenvalue_bound(named_graph("complete_multipartite", (3, 2)), 3).value - 12.0) <= 1e-9
    c5 = eigenvalue_bound(named_graph("cycle", (5,)), 2)
    assert abs(c5.value - 1.25 * (2.0 + GOLDEN)) <= 1e-9  # 4.522542...
    cox = eigenvalue_bound(named_graph("coxeter"), 2)
    assert abs(cox.value - 7.0 * (4.0 + math.sqrt(2.0))) <= 1e-9  # 37.8995


def test_eigenvalue_bound_k_range_and_monotonicity():
    g = named_graph("petersen")
    with pytest.raises(ValueError):
        eigenvalue_bound(g, 1)
    with pytest.raises(ValueError):
        eigenvalue_bound(g, 11)
    vals = [eigenvalue_bound(g, k).value for k in range(2, 11)]
    assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


def test_eigenvalue_bound_k2_is_quarter_n_lambda(rng):
    for _ in range(5):
        g = random_graph(int(rng.integers(4, 12)), 0.5, rng)
        assert abs(eigenvalue_bound(g, 2).value - g.n * lambda_max(g) / 4.0) <= 1e-9


def test_oracle_below_eigenvalue_bound(rng):
    corpus = [
        named_graph("complete", (8,)),
        named_graph("complete_multipartite", (3, 2)),
        named_graph("cycle", (9,)),
        named_graph("petersen"),
        named_graph("kneser", (6, 2)),
        named_graph("hamming", (2, 3, 1)),
        named_graph("hamming", (3, 2, 2)),
    ]
    for g in corpus:
        for k in (2, 3, 4):
            if k > g.n:
                continue
            try:
                _, exact = brute_force_maxkcut(g, k)
            except WorkCapExceeded:
                continue
            assert exact <= eigenvalue_bound(g, k).value + 1e-9


def test_chromatic_bound_examples():
    rep = chromatic_lower_bound(k100_minus_edge())
    assert rep.metadata["ceiling"] == 99
    assert abs(rep.value - (1.0 + 9898.0 / (100 * 100.0 - 9898.0))) <= 1e-9

    for n in (3, 7, 30):
        rep = chromatic_lower_bound(named_graph("complete", (n,)))
        assert abs(rep.value - n) <= 1e-9
        assert rep.metadata["ceiling"] == n

    c4 = chromatic_lower_bound(named_graph("cycle", (4,)))
    assert abs(c4.value - 2.0) <= 1e-12
    assert c4.metadata["ceiling"] == 2

    edgeless = chromatic_lower_bound(Graph(n=3, weights=np.zeros((3, 3))))
    assert edgeless.value == 1.0 and edgeless.metadata["degenerate"]

    # weighted graphs use total weight for 2|E| and carry a flag
    W = np.array([[0.0, 2.0], [2.0, 0.0]])
    weighted = chromatic_lower_bound(Graph(n=2, weights=W))
    assert weighted.metadata.get("weighted") is True


def test_hoffman_examples():
    assert abs(hoffman_bound(named_graph("petersen")).value - 2.5) <= 1e-9
    rep = hoffman_bound(k100_minus_edge())
    assert rep.metadata["ceiling"] == 51
    for n in (4, 9):
        assert abs(hoffman_bound(named_graph("complete", (n,))).value - n) <= 1e-9


def test_regular_graph_equality_and_general_incomparability():
    regular = [named_graph("petersen"), named_graph("cycle", (7,)), named_graph("complete", (6,))]
    for g in regular:
        assert abs(chromatic_lower_bound(g).value - hoffman_bound(g).value) <= 1e-9
    # non-regular: the two bounds genuinely differ in both directions
    g = k100_minus_edge()
    assert chromatic_lower_bound(g).value > hoffman_bound(g).value + 1


def test_srg_parameters():
    pent = SrgParameters(5, 2, 0, 1)
    assert abs(pent.r - (GOLDEN - 1.0)) <= 1e-12
    assert abs(pent.s - (-GOLDEN)) <= 1e-12
    pet = SrgParameters(10, 3, 0, 1)
    assert pet.r == 1.0 and pet.s == -2.0
    with pytest.raises(ValueError, match="infeasible"):
        SrgParameters(10, 3, 1, 1)


def test_srg_sdp_bound_examples():
    pent = SrgParameters(5, 2, 0, 1)
    rep = srg_sdp_bound(pent, 2)
    assert abs(rep.value - 1.25 * (2.0 + GOLDEN)) <= 1e-9
    assert rep.metadata["active_term"] == "eigenvalue"

    pet = SrgParameters(10, 3, 0, 1)
    rep5 = srg_sdp_bound(pet, 5)
    assert rep5.value == 15.0 and rep5.metadata["active_term"] == "edges"
    rep2 = srg_sdp_bound(pet, 2)
    assert rep2.value == 12.5 and rep2.metadata["active_term"] == "eigenvalue"

    with pytest.raises(ValueError):
        srg_sdp_bound(pent, 5)  # needs k < n


def test_complete_graph_closed_form():
    rep = complete_graph_maxkcut(12, 8)
    assert rep.value == 62.0
    assert rep.metadata["rounded_eigenvalue_bound"] == 63
    assert not rep.metadata["rounded_bound_tight"]

    rep = complete_graph_maxkcut(10, 5)
    assert rep.value == 40.0 and rep.metadata["rounded_bound_tight"]

    rep = complete_graph_maxkcut(7, 3)
    assert rep.value == 16.0

    with pytest.raises(ValueError):
        complete_graph_maxkcut(5, 6)


def test_complete_graph_matches_paper_formula():
    for n in range(2, 13):
        for k in range(2, n + 1):
            e = n % k
            formula = (n * n * (k - 1) - e * (k - e)) / (2.0 * k)
            assert complete_graph_maxkcut(n, k).value == formula


def test_feasibility_flag():
    assert maxkcut_feasibility_flag(named_graph("complete", (4,)), 2)  # bound 4 < 6 edges
    assert not maxkcut_feasibility_flag(named_graph("complete_multipartite", (2, 3)), 2)
    assert maxkcut_feasibility_flag(named_graph("cycle", (5,)), 2)  # 4.52 < 5

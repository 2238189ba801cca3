import itertools
import json

import numpy as np
import pytest

from conftest import random_graph, random_weighted_graph
from kcut.graphs import Graph, cut_weight, named_graph
from kcut.oracle import (
    WorkCapExceeded,
    brute_force_maxkcut,
    brute_force_table,
    enumeration_states,
    gap_report,
    hyperplane_round,
)
from kcut.relaxations import RelaxationKind, build
from kcut.sdp import SdpSolution, solve


def reference_maxkcut(g, k):
    """Independent oracle: full k^n enumeration.  Only for tiny graphs."""
    best = -1.0
    for assign in itertools.product(range(k), repeat=g.n):
        a = np.array(assign)
        val = float(np.sum(g.weights[a[:, None] != a[None, :]]) / 2.0)
        best = max(best, val)
    return best


def test_brute_force_examples():
    _, v = brute_force_maxkcut(named_graph("complete", (4,)), 2)
    assert v == 4.0
    _, v = brute_force_maxkcut(named_graph("cycle", (5,)), 2)
    assert v == 4.0
    _, v = brute_force_maxkcut(named_graph("petersen"), 2)
    assert v == 12.0


def test_brute_force_matches_reference(rng):
    for trial in range(6):
        g = random_weighted_graph(int(rng.integers(4, 8)), 0.6, rng)
        for k in (2, 3, 4):
            _, got = brute_force_maxkcut(g, k)
            assert got == reference_maxkcut(g, k)


def test_partition_is_canonical_and_optimal(rng):
    g = random_graph(9, 0.5, rng)
    for k in (2, 3):
        part, val = brute_force_maxkcut(g, k)
        assert cut_weight(g, part) == val
        assert part.assignment[0] == 0
        seen = []
        for a in part.assignment:
            if a not in seen:
                seen.append(int(a))
        assert seen == sorted(seen)  # labels first-used in increasing order


def test_determinism(rng):
    g = random_graph(8, 0.5, rng)
    p1, v1 = brute_force_maxkcut(g, 3)
    p2, v2 = brute_force_maxkcut(g, 3)
    assert v1 == v2 and np.array_equal(p1.assignment, p2.assignment)


def test_work_caps():
    g = named_graph("kneser", (6, 2))  # n = 15
    with pytest.raises(WorkCapExceeded, match="states"):
        brute_force_maxkcut(g, 4, state_cap=1_000_000)
    big = Graph(n=40, weights=np.zeros((40, 40)))
    with pytest.raises(WorkCapExceeded, match="2\\^39"):
        brute_force_maxkcut(big, 2)
    assert enumeration_states(12, 12) == 4213597  # Bell(12)


def test_table_consistency(rng):
    g = random_graph(8, 0.5, rng)
    table = brute_force_table(g, 4)
    best = [table[j][0] for j in range(1, 5) if table[j] is not None]
    for k in (2, 3, 4):
        _, v = brute_force_maxkcut(g, k)
        assert v == max(best[:k])


def test_hyperplane_round_pentagon():
    g = named_graph("cycle", (5,))
    sol = solve(build(g, 2, RelaxationKind.MAIN_SDP))
    part, val = hyperplane_round(sol, g, 2, trials=1000, seed=3)
    assert val == 4.0  # known max-cut, found with overwhelming probability
    assert cut_weight(g, part) == val


def test_hyperplane_round_multipartite():
    g = named_graph("complete_multipartite", (3, 2))
    sol = solve(build(g, 3, RelaxationKind.MAIN_SDP))
    _, val = hyperplane_round(sol, g, 3, trials=1000, seed=5)
    assert val == 12.0


def test_hyperplane_round_degenerate_all_ones():
    g = named_graph("cycle", (4,))
    model = build(g, 2, RelaxationKind.MAIN_SDP)
    ones = SdpSolution.from_matrix(model, np.ones((4, 4)))
    part, val = hyperplane_round(ones, g, 2, trials=50, seed=9)
    assert val == 0.0  # identical vertex vectors land in one part
    assert len(set(part.assignment.tolist())) == 1


def test_rounding_seeded_determinism_and_bounds(rng):
    g = random_graph(8, 0.5, rng)
    sol = solve(build(g, 2, RelaxationKind.MAIN_SDP))
    p1, v1 = hyperplane_round(sol, g, 2, trials=200, seed=7)
    p2, v2 = hyperplane_round(sol, g, 2, trials=200, seed=7)
    assert v1 == v2 and np.array_equal(p1.assignment, p2.assignment)
    assert v1 <= sol.objective_value + 1e-6
    _, exact = brute_force_maxkcut(g, 2)
    assert v1 <= exact


def test_gap_report_pentagon():
    rep = gap_report(named_graph("cycle", (5,)), 2, seed=1)
    vals = dict(rep.rows)
    assert rep.exact == 4.0
    assert abs(vals["eigenvalue_bound"] - 4.522542) <= 1e-4
    assert abs(vals["main_sdp_with_cuts"] - 4.0) <= 1e-4
    assert vals["best_rounded_cut"] == 4.0
    payload = json.loads(rep.to_json())
    assert payload["exact"] == 4.0
    assert "eigenvalue_bound" in payload["gaps"]
    text = rep.to_text()
    assert "exact" in text and "main_sdp" in text


def test_gap_report_k12_k8():
    rep = gap_report(named_graph("complete", (12,)), 8, with_cuts=False,
                     rounding_trials=50, seed=2)
    assert rep.exact == 62.0
    vals = dict(rep.rows)
    assert abs(vals["eigenvalue_bound"] - 63.0) <= 1e-9


def test_gap_report_multipartite_zero_gap():
    rep = gap_report(named_graph("complete_multipartite", (3, 2)), 3,
                     with_cuts=False, rounding_trials=200, seed=4)
    assert rep.exact == 12.0
    vals = dict(rep.rows)
    assert abs(vals["eigenvalue_bound"] - 12.0) <= 1e-9  # tight, gap zero
    assert vals["best_rounded_cut"] == 12.0

import math

import numpy as np
import pytest

from conftest import random_graph
from kcut.errors import CapExceeded
from kcut.graphs import Partition, named_graph
from kcut.relaxations import RelaxationKind, build, triangle_cuts
from kcut.sdp import (
    Cut,
    SdpModel,
    SdpSolution,
    SolverOptions,
    certify,
    dump_model,
    smat,
    solve,
    svec,
)
from kcut.spectra import lambda_max


def test_svec_round_trip(rng):
    M = rng.standard_normal((6, 6))
    M = (M + M.T) / 2
    assert np.allclose(smat(svec(M), 6), M, atol=1e-14)
    # svec preserves the Frobenius inner product
    N = rng.standard_normal((6, 6))
    N = (N + N.T) / 2
    assert abs(svec(M) @ svec(N) - np.sum(M * N)) <= 1e-10


def test_model_validation():
    L = np.zeros((3, 3))
    with pytest.raises(ValueError, match="exactly one"):
        SdpModel(n=3, objective=L)
    with pytest.raises(ValueError, match="exactly one"):
        SdpModel(n=3, objective=L, diag_values=np.ones(3), trace_value=3.0)
    with pytest.raises(ValueError, match="cone_k"):
        SdpModel(n=3, objective=L, diag_values=np.ones(3), cone="shifted_psd")
    with pytest.raises(ValueError, match="out of range"):
        SdpModel(n=3, objective=L, diag_values=np.ones(3),
                 cuts=[Cut(pairs=((0, 5),), coeffs=(1.0,), rhs=1.0)])
    with pytest.raises(ValueError, match="0 <= i < j"):
        Cut(pairs=((2, 1),), coeffs=(1.0,), rhs=1.0)


def test_eig_sdp_pentagon():
    g = named_graph("cycle", (5,))
    sol = solve(build(g, 2, RelaxationKind.EIG_SDP))
    expect = 1.25 * (2.0 + (1.0 + math.sqrt(5.0)) / 2.0)
    assert sol.status == "optimal"
    assert abs(sol.objective_value - expect) <= 1e-6


def test_main_sdp_k3_on_triangle():
    g = named_graph("complete", (3,))
    sol = solve(build(g, 3, RelaxationKind.MAIN_SDP))
    assert abs(sol.objective_value - 3.0) <= 1e-6  # all edges cut


def test_main_sdp_coxeter():
    g = named_graph("coxeter")
    sol = solve(build(g, 2, RelaxationKind.MAIN_SDP))
    assert abs(sol.objective_value - 7.0 * (4.0 + math.sqrt(2.0))) <= 1e-4
    assert sol.status == "optimal"
    assert sol.gap is not None and abs(sol.gap) <= 1e-6 * (1 + sol.objective_value)


def test_eig_sdp_matches_closed_form(rng):
    for _ in range(6):
        n = int(rng.integers(8, 26))
        g = random_graph(n, 0.5, rng)
        lam = lambda_max(g)
        for k in (2, 5):
            sol = solve(build(g, k, RelaxationKind.EIG_SDP))
            assert abs(sol.objective_value - n * (k - 1) / (2.0 * k) * lam) <= 1e-5


def test_adding_cuts_never_increases(rng):
    g = random_graph(7, 0.6, rng)
    base = solve(build(g, 2, RelaxationKind.MAIN_SDP)).objective_value
    model = build(g, 2, RelaxationKind.MAIN_SDP)
    model.cuts.extend(triangle_cuts(7))
    cut_val = solve(model).objective_value
    assert cut_val <= base + 1e-6


def test_certify_optimal_and_bogus():
    g = named_graph("cycle", (5,))
    model = build(g, 2, RelaxationKind.MAIN_SDP)
    sol = solve(model)
    rep = certify(model, sol, tol=1e-7)
    assert rep.passed and rep.cone_ok and rep.equality_ok

    zero = SdpSolution.from_matrix(model, np.zeros((5, 5)))
    rep0 = certify(model, zero, tol=1e-7)
    assert not rep0.passed
    assert abs(rep0.equality_residual - 1.0) <= 1e-12

    # a solution violating one triangle cut by 0.1 flags exactly that cut
    model2 = build(g, 2, RelaxationKind.MAIN_SDP)
    model2.cuts.append(Cut(pairs=((0, 1),), coeffs=(1.0,), rhs=0.4))
    Y = np.eye(5)
    Y[0, 1] = Y[1, 0] = 0.5
    bad = certify(model2, SdpSolution.from_matrix(model2, Y), tol=1e-7)
    assert not bad.cuts_ok and bad.violated_cuts == (0,)
    assert abs(bad.cut_violation - 0.1) <= 1e-12


def test_partition_point_is_feasible_for_main_sdp(rng):
    g = named_graph("petersen")
    model = build(g, 3, RelaxationKind.MAIN_SDP)
    p = Partition(assignment=rng.integers(0, 3, size=10), k=3)
    X = p.incidence()
    rep = certify(model, SdpSolution.from_matrix(model, X @ X.T), tol=1e-9)
    assert rep.passed


def test_infeasible_cut_detected():
    g = named_graph("cycle", (5,))
    model = build(g, 2, RelaxationKind.MAIN_SDP)
    model.cuts.append(Cut(pairs=((0, 1),), coeffs=(1.0,), rhs=-5.0))
    sol = solve(model)
    assert sol.status == "infeasible"


def test_max_iter_status():
    g = named_graph("cycle", (5,))
    sol = solve(build(g, 2, RelaxationKind.MAIN_SDP), SolverOptions(max_iter=40))
    assert sol.status == "max_iter"
    assert "primal" in sol.residuals


def test_n_cap():
    with pytest.raises(CapExceeded):
        solve(build(named_graph("cycle", (12,)), 2, RelaxationKind.MAIN_SDP),
              SolverOptions(n_cap=10))


def test_dual_bound_sandwiches_objective(rng):
    g = random_graph(9, 0.5, rng)
    for kind in RelaxationKind:
        sol = solve(build(g, 3, kind))
        assert sol.dual_bound is not None
        assert sol.dual_bound >= sol.objective_value - 1e-6 * (1 + abs(sol.objective_value))


def test_dump_model_format():
    g = named_graph("cycle", (4,))
    model = build(g, 2, RelaxationKind.MAIN_SDP)
    model.cuts.append(Cut(pairs=((0, 1), (0, 2), (1, 2)), coeffs=(1.0, 1.0, -1.0), rhs=1.0))
    text = dump_model(model)
    lines = text.splitlines()
    assert lines[0] == "kcut-sdp-model 1"
    assert lines[1] == "n 4"
    assert lines[2] == "obj_scale 0.5"
    assert lines[3] == "objective"
    # dense row-major objective rows
    row0 = [float(v) for v in lines[4].split()]
    assert row0 == [2.0, -1.0, 0.0, -1.0]
    assert any(ln.startswith("constraint diag") for ln in lines)
    assert "cone shifted_psd 2" in lines
    assert "cuts 1" in lines
    assert lines[-1].startswith("cut 1 3 0 1 1 0 2 1 1 2 -1")

"""Builders mapping a (graph, k) pair to each semidefinite relaxation of the
max-k-cut, plus generation and separation of triangle and independent-set
inequalities and a cutting-plane loop on top of the solver.

The four relaxations (Y is n-by-n symmetric, L the Laplacian, J all-ones):

  main_sdp       max 1/2 tr(LY)         diag(Y) = 1,        kY - J >= 0, Y >= 0
  frieze_jerrum  max (k-1)/(2k) tr(LY)  diag(Y) = 1,        Y psd, Y >= -J/(k-1)
  eig_sdp        max 1/2 tr(LY)         tr(Y) = n,          kY - J >= 0
  perturbed_sdp  max 1/2 tr(LY)         diag(Y) = (k-1)/k,  Y psd

main_sdp and frieze_jerrum have equal optima; eig_sdp solves in closed form
to n(k-1)/(2k) lambda_max(L); perturbed_sdp sits between them and equals the
best diagonal perturbation of the eigenvalue bound.
"""

from __future__ import annotations

import enum
import itertools
import math

import numpy as np

from .errors import CapExceeded
from .graphs import Graph, laplacian
from .sdp import Cut, SdpModel, SdpSolution, SolverOptions, solve

__all__ = [
    "RelaxationKind",
    "build",
    "triangle_cuts",
    "separate_triangles",
    "independent_set_cuts",
    "cutting_plane_loop",
]

INDEP_SET_CAP = 10**6


class RelaxationKind(str, enum.Enum):
    MAIN_SDP = "main_sdp"
    FRIEZE_JERRUM = "frieze_jerrum"
    EIG_SDP = "eig_sdp"
    PERTURBED_SDP = "perturbed_sdp"


def build(g: Graph, k: int, kind: RelaxationKind | str) -> SdpModel:
    """The relaxation ``kind`` for the max-k-cut of ``g`` as an SdpModel."""
    if not 2 <= k <= g.n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={g.n}")
    kind = RelaxationKind(kind)
    n = g.n
    L = laplacian(g).L
    label = f"{kind.value}(k={k}, {g.name or 'graph'})"
    if kind is RelaxationKind.MAIN_SDP:
        return SdpModel(
            n=n, objective=L, obj_scale=0.5, diag_values=np.ones(n),
            cone="shifted_psd", cone_k=k, elementwise_lower=np.zeros((n, n)),
            name=label,
        )
    if kind is RelaxationKind.FRIEZE_JERRUM:
        return SdpModel(
            n=n, objective=L, obj_scale=(k - 1) / (2.0 * k), diag_values=np.ones(n),
            cone="psd", elementwise_lower=np.full((n, n), -1.0 / (k - 1)),
            name=label,
        )
    if kind is RelaxationKind.EIG_SDP:
        return SdpModel(
            n=n, objective=L, obj_scale=0.5, trace_value=float(n),
            cone="shifted_psd", cone_k=k, name=label,
        )
    return SdpModel(
        n=n, objective=L, obj_scale=0.5, diag_values=np.full(n, (k - 1) / k),
        cone="psd", name=label,
    )


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def triangle_cuts(n: int) -> list[Cut]:
    """All 3 C(n,3) inequalities y_ij + y_ik <= 1 + y_jk: each unordered
    triple contributes one cut per choice of the apex i."""
    if n < 3:
        raise ValueError("triangle cuts need n >= 3")
    cuts = []
    for a, b, c in itertools.combinations(range(n), 3):
        for apex, j, kk in ((a, b, c), (b, a, c), (c, a, b)):
            cuts.append(
                Cut(pairs=(_pair(apex, j), _pair(apex, kk), _pair(j, kk)),
                    coeffs=(1.0, 1.0, -1.0), rhs=1.0)
            )
    return cuts


def separate_triangles(Y: np.ndarray, max_cuts: int = 2000,
                       violation_tol: float = 1e-5) -> list[Cut]:
    """The most violated triangle inequalities at Y, sorted by violation
    (descending), ties broken lexicographically by (apex, j, k)."""
    n = Y.shape[0]
    if n < 3:
        return []
    # violation of apex i over pair (j,k): y_ij + y_ik - y_jk - 1
    V = Y[:, :, None] + Y[:, None, :] - Y[None, :, :] - 1.0
    found = []
    jj, kk = np.triu_indices(n, 1)
    for i in range(n):
        vi = V[i, jj, kk]
        mask = vi > violation_tol
        for idx in np.nonzero(mask)[0]:
            j, k2 = int(jj[idx]), int(kk[idx])
            if i == j or i == k2:
                continue
            found.append((float(vi[idx]), (i, j, k2)))
    found.sort(key=lambda t: (-t[0], t[1]))
    out = []
    for viol, (i, j, k2) in found[:max_cuts]:
        out.append(
            Cut(pairs=(_pair(i, j), _pair(i, k2), _pair(j, k2)),
                coeffs=(1.0, 1.0, -1.0), rhs=1.0)
        )
    return out


def independent_set_cuts(n: int, k: int, cap: int = INDEP_SET_CAP) -> list[Cut]:
    """One inequality sum_{i<j in Q} y_ij >= 1 per (k+1)-subset Q, forbidding
    k+1 pairwise-separated vertices.  Exhaustive; refuses above the cap."""
    if k + 1 > n:
        raise ValueError("independent-set cuts need k + 1 <= n")
    count = math.comb(n, k + 1)
    if count > cap:
        raise CapExceeded(
            f"C({n},{k + 1}) = {count} independent-set cuts exceed the cap {cap}"
        )
    npairs = math.comb(k + 1, 2)
    cuts = []
    for Q in itertools.combinations(range(n), k + 1):
        pairs = tuple(itertools.combinations(Q, 2))
        cuts.append(Cut(pairs=pairs, coeffs=(-1.0,) * npairs, rhs=-1.0))
    return cuts


def _separate_independent_sets(Y, n, k, violation_tol, max_cuts, cap):
    viol = []
    if math.comb(n, k + 1) > cap:
        raise CapExceeded("independent-set separation above the enumeration cap")
    for Q in itertools.combinations(range(n), k + 1):
        s = sum(Y[a, b] for a, b in itertools.combinations(Q, 2))
        if 1.0 - s > violation_tol:
            viol.append((1.0 - s, Q))
    viol.sort(key=lambda t: (-t[0], t[1]))
    out = []
    for _, Q in viol[:max_cuts]:
        pairs = tuple(itertools.combinations(Q, 2))
        out.append(Cut(pairs=pairs, coeffs=(-1.0,) * len(pairs), rhs=-1.0))
    return out


def cutting_plane_loop(
    g: Graph,
    k: int,
    base: RelaxationKind | str = RelaxationKind.MAIN_SDP,
    families: tuple[str, ...] = ("triangles",),
    rounds: int = 20,
    max_cuts: int = 2000,
    violation_tol: float = 1e-5,
    options: SolverOptions | None = None,
) -> SdpSolution:
    """Solve ``base``, then repeatedly add the most violated inequalities
    from the requested families ("triangles", "independent_sets") and
    re-solve, until separation finds nothing or ``rounds`` are exhausted.

    The returned solution carries the per-round objectives and final cut
    count in its info dict; objectives are nonincreasing across rounds.
    """
    for fam in families:
        if fam not in ("triangles", "independent_sets"):
            raise ValueError(f"unknown cut family {fam!r}")
    model = build(g, k, base)
    sol = solve(model, options)
    history = [sol.objective_value]
    seen: set[tuple] = set()
    for _ in range(rounds):
        new: list[Cut] = []
        if "triangles" in families:
            new += separate_triangles(sol.Y, max_cuts, violation_tol)
        if "independent_sets" in families:
            new += _separate_independent_sets(
                sol.Y, g.n, k, violation_tol, max_cuts, INDEP_SET_CAP
            )
        fresh = []
        for cut in new:
            key = (cut.pairs, cut.coeffs, cut.rhs)
            if key not in seen:
                seen.add(key)
                fresh.append(cut)
        if not fresh:
            break
        model.cuts.extend(fresh[:max_cuts])
        sol = solve(model, options)
        history.append(sol.objective_value)
    sol.info["round_objectives"] = history
    sol.info["num_cuts"] = len(model.cuts)
    return sol

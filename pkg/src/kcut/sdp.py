"""Solver for the structured semidefinite programs the relaxations produce.

The model class is deliberately narrow: maximize a scaled trace objective
subject to a diagonal or trace equality, a PSD or shifted-PSD cone
constraint, an optional elementwise lower bound, and optional sparse linear
cuts.  That covers every relaxation in this package while keeping the solver
self-contained.

Algorithm: operator splitting in consensus form.  A shifted cone kY - J >= 0
is removed up front by the substitution Z = kY - J, so the solver always
works with a plain PSD cone.  The variable (in scaled upper-triangle "svec"
coordinates, where the matrix Frobenius product is the plain dot product) is
shared between three full blocks -- the linear objective, the PSD projection
(one dense eigendecomposition per iteration), and the elementwise projection
enforcing the equality and lower bounds -- plus one tiny block per cut, each
a halfspace projection touching only its few coordinates.  Over-relaxation
is fixed at 1.6 and the penalty parameter is auto-scaled from the objective
norm, then rebalanced from the residual ratio.  The start point is the
identity matrix, so runs are deterministic.

On termination a dual feasible point is assembled from the block multipliers
(shifting the diagonal multiplier enough to make the slack matrix PSD), which
yields a valid upper bound on the maximum and hence a duality-gap estimate.
"""

from __future__ import annotations

import io
import time
from dataclasses import dataclass, field

import numpy as np

from . import spectra
from .errors import CapExceeded

__all__ = [
    "Cut",
    "SdpModel",
    "SolverOptions",
    "SdpSolution",
    "CertificationReport",
    "SdpError",
    "solve",
    "certify",
    "dump_model",
]

_SQ2 = np.sqrt(2.0)


class SdpError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# svec coordinates: [diag entries, sqrt(2) * upper-triangle entries]
# ---------------------------------------------------------------------------


def _triu(n):
    return np.triu_indices(n, 1)


def svec(M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    return np.concatenate([np.diag(M), _SQ2 * M[_triu(n)]])


def smat(v: np.ndarray, n: int) -> np.ndarray:
    M = np.zeros((n, n))
    iu = _triu(n)
    np.fill_diagonal(M, v[:n])
    M[iu] = v[n:] / _SQ2
    M.T[iu] = v[n:] / _SQ2
    return M


def _pair_coord(n: int, i: int, j: int) -> int:
    # svec coordinate of the off-diagonal pair (i < j)
    return n + i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Cut:
    """Sparse linear inequality sum_p coeffs[p] * Y[i_p, j_p] <= rhs over
    upper-triangle pairs (i < j)."""

    pairs: tuple[tuple[int, int], ...]
    coeffs: tuple[float, ...]
    rhs: float

    def __post_init__(self):
        if len(self.pairs) != len(self.coeffs) or not self.pairs:
            raise ValueError("cut needs matching, nonempty pairs and coeffs")
        if len(set(self.pairs)) != len(self.pairs):
            raise ValueError("cut pairs must be distinct")
        for i, j in self.pairs:
            if not 0 <= i < j:
                raise ValueError(f"cut pair ({i},{j}) must satisfy 0 <= i < j")

    def value(self, Y: np.ndarray) -> float:
        return float(sum(c * Y[i, j] for (i, j), c in zip(self.pairs, self.coeffs)))


@dataclass
class SdpModel:
    """max obj_scale * tr(objective @ Y) over the structured feasible set.

    Exactly one of ``diag_values`` / ``trace_value`` must be given.  The cone
    is either ``psd`` (Y >= 0 in the Loewner order) or ``shifted_psd``
    (cone_k * Y - J >= 0 with integer cone_k >= 2).  ``elementwise_lower``
    bounds every off-diagonal entry from below (the diagonal is pinned by the
    equality constraints).
    """

    n: int
    objective: np.ndarray
    obj_scale: float = 1.0
    diag_values: np.ndarray | None = None
    trace_value: float | None = None
    cone: str = "psd"
    cone_k: int | None = None
    elementwise_lower: np.ndarray | None = None
    cuts: list[Cut] = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        C = np.asarray(self.objective, dtype=float)
        if C.shape != (self.n, self.n) or np.max(np.abs(C - C.T)) > 1e-10:
            raise ValueError("objective must be a symmetric n-by-n matrix")
        self.objective = C
        if (self.diag_values is None) == (self.trace_value is None):
            raise ValueError("exactly one of diag_values / trace_value must be set")
        if self.diag_values is not None:
            d = np.asarray(self.diag_values, dtype=float)
            if d.shape != (self.n,):
                raise ValueError("diag_values must have length n")
            self.diag_values = d
        if self.cone not in ("psd", "shifted_psd"):
            raise ValueError(f"unknown cone {self.cone!r}")
        if self.cone == "shifted_psd":
            if self.cone_k is None or self.cone_k < 2:
                raise ValueError("shifted_psd requires integer cone_k >= 2")
        if self.elementwise_lower is not None:
            B = np.asarray(self.elementwise_lower, dtype=float)
            if B.shape != (self.n, self.n):
                raise ValueError("elementwise_lower must be n-by-n")
            self.elementwise_lower = B
        for cut in self.cuts:
            for i, j in cut.pairs:
                if j >= self.n:
                    raise ValueError(f"cut pair ({i},{j}) out of range for n={self.n}")

    def objective_value(self, Y: np.ndarray) -> float:
        return float(self.obj_scale * np.sum(self.objective * Y))


@dataclass
class SolverOptions:
    tol_eq: float = 1e-7
    tol_psd: float = 1e-7
    tol_gap: float = 1e-6  # scaled by (1 + |objective|)
    max_iter: int = 200_000
    over_relaxation: float = 1.6
    rho: float | None = None  # auto from objective norm if None
    adapt_penalty: bool = True
    eps_abs: float = 1e-10
    eps_rel: float = 1e-10
    stall_tol: float = 1e-10  # objective stall, scaled by (1 + |objective|)
    stall_window: int = 50
    check_every: int = 25
    n_cap: int = 500


@dataclass
class SdpSolution:
    Y: np.ndarray
    objective_value: float
    status: str  # optimal | max_iter | infeasible
    residuals: dict
    dual_bound: float | None = None
    gap: float | None = None
    iterations: int = 0
    runtime: float = 0.0
    info: dict = field(default_factory=dict)

    @classmethod
    def from_matrix(cls, model: SdpModel, Y: np.ndarray, status: str = "optimal"):
        """Wrap an externally supplied matrix (e.g. a combinatorial point) so
        it can be run through certify()."""
        return cls(Y=np.asarray(Y, float), objective_value=model.objective_value(Y),
                   status=status, residuals={})


# ---------------------------------------------------------------------------
# solver-space form: always a plain PSD cone
# ---------------------------------------------------------------------------


class _SolverSpace:
    """The model after the Z = kY - J substitution (identity for psd cone)."""

    def __init__(self, model: SdpModel):
        n = model.n
        self.n = n
        self.model = model
        k = model.cone_k if model.cone == "shifted_psd" else None
        self.k = k
        C = model.objective
        if k is None:
            self.G = model.obj_scale * C
            self.const = 0.0
            self.diag = model.diag_values
            self.trace = model.trace_value
            B = model.elementwise_lower
            self.lower = None if B is None else B
        else:
            self.G = (model.obj_scale / k) * C
            self.const = (model.obj_scale / k) * float(C.sum())
            self.diag = None if model.diag_values is None else k * model.diag_values - 1.0
            self.trace = None if model.trace_value is None else k * model.trace_value - n
            B = model.elementwise_lower
            self.lower = None if B is None else k * B - 1.0
        self.g = svec(self.G)
        # arity-grouped cuts: svec coordinates, svec coefficients, rhs
        groups: dict[int, list] = {}
        for cut in model.cuts:
            a = len(cut.pairs)
            idx = [_pair_coord(n, i, j) for i, j in cut.pairs]
            if k is None:
                coef = [c / _SQ2 for c in cut.coeffs]
                rhs = cut.rhs
            else:
                coef = [c / (k * _SQ2) for c in cut.coeffs]
                rhs = cut.rhs - sum(cut.coeffs) / k
            groups.setdefault(a, []).append((idx, coef, rhs))
        self.cut_groups = []
        for a in sorted(groups):
            rows = groups[a]
            IDX = np.array([r[0] for r in rows], dtype=np.int64)
            COEF = np.array([r[1] for r in rows])
            RHS = np.array([r[2] for r in rows])
            self.cut_groups.append((IDX, COEF, RHS))

    def to_Y(self, Z: np.ndarray) -> np.ndarray:
        if self.k is None:
            return Z
        return (Z + 1.0) / self.k

    def lower_svec(self):
        if self.lower is None:
            return None
        return _SQ2 * self.lower[_triu(self.n)]


def solve(model: SdpModel, options: SolverOptions | None = None) -> SdpSolution:
    """Solve the model; see the module docstring for the scheme.

    Returns a solution whose residuals are measured on the reported Y.  The
    status is ``optimal`` only when the equality/cone/cut residuals meet the
    option tolerances and the constructed duality gap is within ``tol_gap``;
    an iteration-capped run returns its best iterate with ``max_iter``.
    A stalling run with a persistent drift direction (possible only with
    mutually inconsistent cuts) is reported ``infeasible``.
    """
    opts = options or SolverOptions()
    if model.n > opts.n_cap:
        raise CapExceeded(f"n={model.n} above the configured cap {opts.n_cap}")
    sp = _SolverSpace(model)
    n, m = sp.n, sp.n * (sp.n + 1) // 2
    g = sp.g
    rho = opts.rho if opts.rho is not None else max(float(np.linalg.norm(g)) / n, 1e-3)
    alpha = opts.over_relaxation
    lower_sv = sp.lower_svec()
    cut_groups = sp.cut_groups

    deg = np.full(m, 3.0)
    for IDX, _, _ in cut_groups:
        np.add.at(deg, IDX.reshape(-1), 1.0)

    x = svec(np.eye(n))
    u_obj = np.zeros(m)
    u_psd = np.zeros(m)
    u_el = np.zeros(m)
    UC = [np.zeros(IDX.shape) for IDX, _, _ in cut_groups]
    NORMSQ = [np.einsum("ca,ca->c", COEF, COEF) for _, COEF, _ in cut_groups]
    iu = _triu(n)

    def proj_el(v):
        out = v.copy()
        if sp.diag is not None:
            out[:n] = sp.diag
        else:
            out[:n] += (sp.trace - out[:n].sum()) / n
        if lower_sv is not None:
            np.maximum(out[n:], lower_sv, out=out[n:])
        return out

    t0 = time.time()
    status = "max_iter"
    obj_hist: list[float] = []
    feas_hist: list[tuple[float, float]] = []  # (primal residual, dual-variable norm)
    r = s = np.inf
    nadapt = 0

    it = 0
    for it in range(1, opts.max_iter + 1):
        zn_obj = (x - u_obj) + g / rho
        M = smat(x - u_psd, n)
        w, Q = np.linalg.eigh(M)
        np.clip(w, 0.0, None, out=w)
        zn_psd = svec((Q * w) @ Q.T)
        zn_el = proj_el(x - u_el)

        acc = alpha * (zn_obj + zn_psd + zn_el) + 3 * (1 - alpha) * x + (u_obj + u_psd + u_el)
        ZN_C = []
        for ci, (IDX, COEF, RHS) in enumerate(cut_groups):
            V = x[IDX] - UC[ci]
            viol = np.einsum("ca,ca->c", COEF, V) - RHS
            pos = viol > 0
            if pos.any():
                V[pos] -= (viol[pos] / NORMSQ[ci][pos])[:, None] * COEF[pos]
            ZN_C.append(V)
            np.add.at(acc, IDX.reshape(-1),
                      (alpha * V + (1 - alpha) * x[IDX] + UC[ci]).reshape(-1))
        xn = acc / deg

        u_obj += alpha * zn_obj + (1 - alpha) * x - xn
        u_psd += alpha * zn_psd + (1 - alpha) * x - xn
        u_el += alpha * zn_el + (1 - alpha) * x - xn
        for ci, (IDX, COEF, RHS) in enumerate(cut_groups):
            UC[ci] += alpha * ZN_C[ci] + (1 - alpha) * x[IDX] - xn[IDX]

        if it % opts.check_every == 0:
            r2 = np.sum((zn_psd - xn) ** 2) + np.sum((zn_el - xn) ** 2)
            for ci, (IDX, _, _) in enumerate(cut_groups):
                r2 += np.sum((ZN_C[ci] - xn[IDX]) ** 2)
            r = float(np.sqrt(r2))
            s = float(rho * np.linalg.norm(xn - x))
            obj = float(g @ xn)
            obj_hist.append(obj)
            eps_r = np.sqrt(m) * opts.eps_abs + opts.eps_rel * max(
                float(np.linalg.norm(xn)), float(np.linalg.norm(zn_psd)))
            eps_s = np.sqrt(m) * opts.eps_abs + opts.eps_rel * rho * float(np.linalg.norm(u_psd))
            window = opts.stall_window // opts.check_every + 1
            stalled = (
                len(obj_hist) > window
                and abs(obj_hist[-1] - obj_hist[-1 - window]) <= opts.stall_tol * (1 + abs(obj))
            )
            if r <= eps_r and s <= eps_s and stalled:
                x = xn
                status = "converged"
                break
            # infeasibility certificate: the primal residual pins at a positive
            # constant while the dual variables diverge linearly (possible only
            # when user cuts contradict the other constraints)
            if it % 1000 == 0:
                unorm = float(np.sqrt(
                    np.sum(u_obj**2) + np.sum(u_psd**2) + np.sum(u_el**2)
                    + sum(float(np.sum(uc**2)) for uc in UC)
                ))
                feas_hist.append((r, unorm))
                if len(feas_hist) >= 12 and it > 22_000:
                    rs = [h[0] for h in feas_hist[-12:]]
                    stagnant = max(rs) - min(rs) < 1e-3 * max(min(rs), 1e-30)
                    large = min(rs) > 1e-6 * (1.0 + float(np.linalg.norm(xn)))
                    u_then = feas_hist[-12][1]
                    diverging = unorm > 1.5 * u_then + 1.0
                    if stagnant and large and diverging:
                        x = xn
                        status = "infeasible"
                        break
            if (
                opts.adapt_penalty
                and it % 200 == 0
                and it <= 20_000
                and nadapt < 40
            ):
                if r > 10 * s:
                    rho *= 2.0
                    u_obj /= 2.0; u_psd /= 2.0; u_el /= 2.0
                    for ci in range(len(UC)):
                        UC[ci] /= 2.0
                    nadapt += 1
                elif s > 10 * r:
                    rho /= 2.0
                    u_obj *= 2.0; u_psd *= 2.0; u_el *= 2.0
                    for ci in range(len(UC)):
                        UC[ci] *= 2.0
                    nadapt += 1
        x = xn

    runtime = time.time() - t0
    Z = smat(x, n)
    Y = sp.to_Y(Z)
    obj_val = model.objective_value(Y)
    resid = _residuals(model, Y)
    resid["primal"] = r
    resid["dual"] = s

    dual_bound = gap = None
    if status != "infeasible":
        dual_z = _dual_bound(sp, rho, u_el, UC)
        dual_bound = dual_z + sp.const
        gap = dual_bound - obj_val

    if status == "converged":
        ok = (
            resid["equality"] <= opts.tol_eq
            and resid["cone_min_eig"] >= -opts.tol_psd
            and resid["lower_violation"] <= opts.tol_eq
            and resid["cut_violation"] <= opts.tol_eq
            and (gap is None or gap <= opts.tol_gap * (1 + abs(obj_val)) )
        )
        status = "optimal" if ok else "max_iter"

    return SdpSolution(
        Y=Y,
        objective_value=obj_val,
        status=status,
        residuals=resid,
        dual_bound=dual_bound,
        gap=gap,
        iterations=it,
        runtime=runtime,
        info={"rho": rho, "penalty_adaptations": nadapt, "model": model.name},
    )


def _residuals(model: SdpModel, Y: np.ndarray) -> dict:
    n = model.n
    if model.diag_values is not None:
        eq = float(np.max(np.abs(np.diag(Y) - model.diag_values)))
    else:
        eq = float(abs(np.trace(Y) - model.trace_value))
    cone_M = model.cone_k * Y - 1.0 if model.cone == "shifted_psd" else Y
    cone_min = float(np.linalg.eigvalsh(cone_M)[0])
    if model.elementwise_lower is not None:
        off = ~np.eye(n, dtype=bool)
        low = float(np.max(np.clip(model.elementwise_lower - Y, 0.0, None)[off], initial=0.0))
    else:
        low = 0.0
    cutv = max((cut.value(Y) - cut.rhs for cut in model.cuts), default=0.0)
    return {
        "equality": eq,
        "cone_min_eig": cone_min,
        "lower_violation": low,
        "cut_violation": float(max(cutv, 0.0)),
    }


def _dual_bound(sp: _SolverSpace, rho: float, u_el: np.ndarray, UC) -> float:
    """Assemble a dual feasible point from the block multipliers.

    For max <G,Z> s.t. diag(Z)=d (or tr), Z >= B offdiag, <A_c,Z> <= b_c,
    Z psd, the dual slack is S = Diag(nu) - M + sum mu_c A_c - G with
    M, mu >= 0 and S psd; any deficit in S is repaired by shifting nu
    uniformly, which keeps feasibility and costs t * sum(d) (resp. t * tr).
    """
    n = sp.n
    Y_el = smat(rho * u_el, n)
    # stationarity gives y_el = -Diag(nu) + M with M >= 0 supported where the
    # lower bound is active; clip to the feasible orthant
    M_hat = Y_el.copy()
    np.fill_diagonal(M_hat, 0.0)
    np.clip(M_hat, 0.0, None, out=M_hat)
    if sp.lower is None:
        M_hat[:] = 0.0

    S = -sp.G - M_hat
    if sp.diag is not None:
        nu = -np.diag(Y_el)
        S += np.diag(nu)
        base = float(nu @ sp.diag)
        shift_weight = float(np.sum(sp.diag))
    else:
        nu0 = -float(np.trace(Y_el)) / n
        S += nu0 * np.eye(n)
        base = nu0 * sp.trace
        shift_weight = sp.trace

    mu_total = 0.0
    for ci, (IDX, COEF, RHS) in enumerate(sp.cut_groups):
        yc = rho * UC[ci]
        mu = -np.einsum("ca,ca->c", yc, COEF) / np.einsum("ca,ca->c", COEF, COEF)
        np.clip(mu, 0.0, None, out=mu)
        # scatter mu_c * A_c into S (svec coords back to matrix entries)
        sv = np.zeros(n * (n + 1) // 2)
        np.add.at(sv, IDX.reshape(-1), (mu[:, None] * COEF).reshape(-1))
        S += smat(sv, n)
        mu_total += float(mu @ RHS)

    t = max(0.0, -float(np.linalg.eigvalsh(S)[0]))
    value = base + t * shift_weight + mu_total
    if sp.lower is not None:
        off = ~np.eye(n, dtype=bool)
        value -= float(np.sum((M_hat * sp.lower)[off]))
    return value


@dataclass(frozen=True)
class CertificationReport:
    passed: bool
    equality_ok: bool
    cone_ok: bool
    lower_ok: bool
    cuts_ok: bool
    equality_residual: float
    cone_min_eigenvalue: float
    lower_violation: float
    cut_violation: float
    violated_cuts: tuple[int, ...]


def certify(model: SdpModel, sol: SdpSolution, tol: float = 1e-7) -> CertificationReport:
    """Recompute all residuals of ``sol.Y`` independently of the solver loop.

    The cone eigenvalue comes from the spectra module rather than the
    solver's projection path, so a broken solve cannot certify itself.
    """
    Y = sol.Y
    n = model.n
    if model.diag_values is not None:
        eq = float(np.max(np.abs(np.diag(Y) - model.diag_values)))
    else:
        eq = float(abs(np.trace(Y) - model.trace_value))
    cone_M = model.cone_k * Y - 1.0 if model.cone == "shifted_psd" else Y
    spec = spectra.eigendecompose(cone_M)
    cone_min = float(spec.distinct_values[0])
    if model.elementwise_lower is not None:
        off = ~np.eye(n, dtype=bool)
        low = float(np.max(np.clip(model.elementwise_lower - Y, 0.0, None)[off], initial=0.0))
    else:
        low = 0.0
    bad = tuple(
        idx for idx, cut in enumerate(model.cuts) if cut.value(Y) - cut.rhs > tol
    )
    cutv = max((cut.value(Y) - cut.rhs for cut in model.cuts), default=0.0)
    rep = CertificationReport(
        passed=(eq <= tol and cone_min >= -tol and low <= tol and not bad),
        equality_ok=eq <= tol,
        cone_ok=cone_min >= -tol,
        lower_ok=low <= tol,
        cuts_ok=not bad,
        equality_residual=eq,
        cone_min_eigenvalue=cone_min,
        lower_violation=low,
        cut_violation=float(max(cutv, 0.0)),
        violated_cuts=bad,
    )
    return rep


def dump_model(model: SdpModel, stream=None) -> str:
    """Plain-text dump (17 significant digits) for cross-checks against
    external solvers; returns the text, optionally writing it to ``stream``."""
    out = io.StringIO()
    w = out.write
    w("kcut-sdp-model 1\n")
    w(f"n {model.n}\n")
    w(f"obj_scale {model.obj_scale:.17g}\n")
    w("objective\n")
    for row in model.objective:
        w(" ".join(f"{v:.17g}" for v in row) + "\n")
    if model.diag_values is not None:
        w("constraint diag " + " ".join(f"{v:.17g}" for v in model.diag_values) + "\n")
    else:
        w(f"constraint trace {model.trace_value:.17g}\n")
    if model.cone == "psd":
        w("cone psd\n")
    else:
        w(f"cone shifted_psd {model.cone_k}\n")
    if model.elementwise_lower is None:
        w("lower none\n")
    else:
        w("lower matrix\n")
        for row in model.elementwise_lower:
            w(" ".join(f"{v:.17g}" for v in row) + "\n")
    w(f"cuts {len(model.cuts)}\n")
    for cut in model.cuts:
        trip = " ".join(
            f"{i} {j} {c:.17g}" for (i, j), c in zip(cut.pairs, cut.coeffs)
        )
        w(f"cut {cut.rhs:.17g} {len(cut.pairs)} {trip}\n")
    text = out.getvalue()
    if stream is not None:
        stream.write(text)
    return text

"""Hamming association scheme: Kravchuk spectra, H(d,q,j) generators, the
largest-Laplacian-eigenvalue conjecture checker, and the first-coordinate
q-cut with its exact tightness certificate.

All Kravchuk and multiplicity computations use Python integers, so the
conjecture grid is exact even at d = 30, q = 15; floating point only enters
when building dense adjacency matrices or talking to the SDP machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import CapExceeded
from .graphs import Graph, Partition, cut_weight

__all__ = [
    "KravchukTable",
    "ConjectureReport",
    "TightnessReport",
    "HammingHypothesisError",
    "kravchuk",
    "kravchuk_table",
    "hamming_graph",
    "hamming_lambda",
    "check_conjecture",
    "conjecture_grid",
    "first_coordinate_qcut",
    "hamming_tightness_certificate",
]

HAMMING_VERTEX_CAP = 4096


class HammingHypothesisError(ValueError):
    """The (d, q, j) triple violates the hypothesis a certificate needs."""


def kravchuk(d: int, q: int, j: int, i: int) -> int:
    """Exact Kravchuk value K_j(i) for the scheme with d positions, alphabet q.

    K_j(i) = sum_h (-q)^h (q-1)^(j-h) C(d-h, j-h) C(i, h); this is the
    adjacency eigenvalue of H(d,q,j) on the i-th eigenspace.
    """
    if q < 2:
        raise ValueError("alphabet size q must be >= 2")
    if not (0 <= i <= d and 0 <= j <= d):
        raise ValueError("need 0 <= i, j <= d")
    return sum(
        (-q) ** h * (q - 1) ** (j - h) * comb(d - h, j - h) * comb(i, h)
        for h in range(0, j + 1)
    )


@dataclass(frozen=True)
class KravchukTable:
    """All values K[j][i] for 0 <= i, j <= d, plus eigenspace multiplicities."""

    d: int
    q: int
    K: tuple[tuple[int, ...], ...]
    multiplicities: tuple[int, ...]  # m_i = C(d, i) (q-1)^i

    def orthogonality_defect(self) -> int:
        """Max |sum_i m_i K_j(i) K_l(i) - delta_jl q^d C(d,j)(q-1)^j|, exactly."""
        worst = 0
        qd = self.q**self.d
        for j in range(self.d + 1):
            for l in range(j, self.d + 1):
                acc = sum(
                    self.multiplicities[i] * self.K[j][i] * self.K[l][i]
                    for i in range(self.d + 1)
                )
                expect = qd * comb(self.d, j) * (self.q - 1) ** j if j == l else 0
                worst = max(worst, abs(acc - expect))
        return worst


def kravchuk_table(d: int, q: int) -> KravchukTable:
    if q < 2 or d < 0:
        raise ValueError("need q >= 2 and d >= 0")
    K = tuple(tuple(kravchuk(d, q, j, i) for i in range(d + 1)) for j in range(d + 1))
    mult = tuple(comb(d, i) * (q - 1) ** i for i in range(d + 1))
    assert sum(mult) == q**d
    return KravchukTable(d=d, q=q, K=K, multiplicities=mult)


def _digit_matrix(d: int, q: int) -> np.ndarray:
    # vertex v <-> tuple (x_1..x_d) with v = sum x_t q^(t-1)
    n = q**d
    digs = np.empty((n, d), dtype=np.int64)
    v = np.arange(n)
    for t in range(d):
        digs[:, t] = v % q
        v = v // q
    return digs


def hamming_graph(d: int, q: int, j: int, cap: int = HAMMING_VERTEX_CAP) -> Graph:
    """Graph H(d,q,j) on q^d vertices: adjacency = differing in exactly j
    coordinates.  Regular of degree C(d,j)(q-1)^j; the exact Laplacian
    spectrum {K_j(0) - K_j(i)} is attached for use as an eigensolver check.
    """
    if not 1 <= j <= d:
        raise ValueError("need 1 <= j <= d")
    if q < 2:
        raise ValueError("alphabet size q must be >= 2")
    n = q**d
    if n > cap:
        raise CapExceeded(f"H({d},{q},{j}) has {n} vertices, above the cap {cap}")
    digs = _digit_matrix(d, q)
    diff = np.zeros((n, n), dtype=np.int64)
    for t in range(d):
        diff += digs[:, t, None] != digs[None, :, t]
    W = (diff == j).astype(float)

    table = kravchuk_table(d, q)
    groups: dict[int, int] = {}
    for i in range(d + 1):
        lam = table.K[j][0] - table.K[j][i]
        groups[lam] = groups.get(lam, 0) + table.multiplicities[i]
    spec = tuple((float(v), m) for v, m in sorted(groups.items()))
    return Graph(n=n, weights=W, name=f"H({d},{q},{j})", exact_laplacian_spectrum=spec)


def hamming_lambda(d: int, q: int, j: int) -> int:
    """The Laplacian eigenvalue K_j(0) - K_j(1) = q (q-1)^(j-1) C(d-1, j-1)
    of H(d,q,j) attached to the distinguished scheme idempotent."""
    if not 1 <= j <= d:
        raise ValueError("need 1 <= j <= d")
    lam = kravchuk(d, q, j, 0) - kravchuk(d, q, j, 1)
    closed = q * (q - 1) ** (j - 1) * comb(d - 1, j - 1)
    assert lam == closed, (lam, closed)
    return lam


def in_conjecture_hypothesis(d: int, q: int, j: int) -> bool:
    """j >= d - (d-1)/q, with j even when q = 2 (H(d,2,j) is bipartite for odd j)."""
    if q == 2 and j % 2 == 1:
        return False
    return j * q >= d * q - (d - 1)


@dataclass(frozen=True)
class ConjectureRow:
    d: int
    q: int
    j: int
    in_hypothesis: bool
    k_at_one: int
    min_value: int
    argmin: int
    passed: bool  # min_i K_j(i) attained at i = 1 (only asserted in hypothesis)


@dataclass(frozen=True)
class ConjectureReport:
    d: int
    q: int
    rows: tuple[ConjectureRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows if r.in_hypothesis)


def check_conjecture(d: int, q: int) -> ConjectureReport:
    """Check, for each j, whether min_i K_j(i) = K_j(1) in exact arithmetic.

    Within the hypothesis j >= d - (d-1)/q (j even if q = 2) this is the
    claim that hamming_lambda is the largest Laplacian eigenvalue of
    H(d,q,j); rows outside the hypothesis are informational.
    """
    if d < 1 or q < 2:
        raise ValueError("need d >= 1 and q >= 2")
    table = kravchuk_table(d, q)
    rows = []
    for j in range(1, d + 1):
        vals = table.K[j]
        argmin = min(range(d + 1), key=lambda i: (vals[i], i))
        rows.append(
            ConjectureRow(
                d=d,
                q=q,
                j=j,
                in_hypothesis=in_conjecture_hypothesis(d, q, j),
                k_at_one=vals[1],
                min_value=vals[argmin],
                argmin=argmin,
                passed=vals[argmin] == vals[1],
            )
        )
    return ConjectureReport(d=d, q=q, rows=tuple(rows))


def conjecture_grid(dmax: int, qmax: int) -> list[ConjectureReport]:
    """Reports for every (d, q) with 1 <= d <= dmax, 2 <= q <= qmax."""
    return [check_conjecture(d, q) for d in range(1, dmax + 1) for q in range(2, qmax + 1)]


def first_coordinate_qcut(
    d: int, q: int, j: int, cap: int = HAMMING_VERTEX_CAP
) -> tuple[Partition, int]:
    """The q-cut of H(d,q,j) that splits vertices by their first coordinate.

    Returns the partition and its exact cut weight, which satisfies the
    integer identity 2q * cut = n (q-1) * hamming_lambda(d,q,j).
    """
    g = hamming_graph(d, q, j, cap=cap)
    digs = _digit_matrix(d, q)
    part = Partition(assignment=digs[:, 0], k=q)
    value = cut_weight(g, part)
    cut = int(round(value))
    assert abs(value - cut) < 1e-9
    n = q**d
    lam = hamming_lambda(d, q, j)
    if 2 * q * cut != n * (q - 1) * lam:
        raise AssertionError(
            f"first-coordinate cut identity failed for H({d},{q},{j}): "
            f"2q*cut={2*q*cut} vs n(q-1)lambda={n*(q-1)*lam}"
        )
    return part, cut


@dataclass(frozen=True)
class TightnessReport:
    """Exact tightness of the eigenvalue bound for H(d,q,j) at k = q.

    ``cut_value`` is the first-coordinate q-cut; ``eigenvalue_bound_2q`` holds
    2q times the k=q eigenvalue bound (an exact integer); ``sdp_checks`` maps
    k to (solved mainSDP value, eigenvalue bound) for the numerically
    verified sizes.
    """

    d: int
    q: int
    j: int
    lam: int
    cut_value: int
    eigenvalue_bound_2q: int
    tight: bool
    sdp_checks: dict = field(default_factory=dict)


def hamming_tightness_certificate(
    d: int,
    q: int,
    j: int,
    solve_k: tuple[int, ...] = (),
    solver_options=None,
    cap: int = HAMMING_VERTEX_CAP,
) -> TightnessReport:
    """Certify max-q-cut tightness of the eigenvalue bound for H(d,q,j).

    Requires the hypothesis j >= d - (d-1)/q (j even if q = 2) and verifies
    per-instance, in exact arithmetic, that hamming_lambda is the minimal
    Kravchuk value (hence the largest Laplacian eigenvalue); refuses
    otherwise.  The exact identity cut = n(k-1)/(2k) lambda at k = q is then
    checked on the constructed cut.  For each k in ``solve_k`` (k <= q), the
    relaxation with the full constraint set is solved numerically and
    reported next to the eigenvalue bound.
    """
    if not in_conjecture_hypothesis(d, q, j):
        raise HammingHypothesisError(
            f"H({d},{q},{j}): hypothesis j >= d-(d-1)/q (j even if q=2) fails; "
            "the eigenvalue-bound tightness statement does not apply"
        )
    table = kravchuk_table(d, q)
    vals = table.K[j]
    if min(vals) != vals[1]:
        raise HammingHypothesisError(
            f"H({d},{q},{j}): K_j({int(np.argmin(vals))}) < K_j(1); lambda is not "
            "the largest Laplacian eigenvalue, certificate refused"
        )
    lam = hamming_lambda(d, q, j)
    n = q**d
    _, cut = first_coordinate_qcut(d, q, j, cap=cap)
    bound_2q = n * (q - 1) * lam  # 2q * (eigenvalue bound at k = q)
    tight = 2 * q * cut == bound_2q

    sdp_checks = {}
    if solve_k:
        from .relaxations import RelaxationKind, build
        from .sdp import solve

        g = hamming_graph(d, q, j, cap=cap)
        for k in solve_k:
            if not 2 <= k <= q:
                raise ValueError(f"solve_k entries must satisfy 2 <= k <= q, got {k}")
            sol = solve(build(g, k, RelaxationKind.MAIN_SDP), solver_options)
            eig_bound = n * (k - 1) / (2.0 * k) * lam
            sdp_checks[k] = (sol.objective_value, eig_bound)

    return TightnessReport(
        d=d, q=q, j=j, lam=lam, cut_value=cut,
        eigenvalue_bound_2q=bound_2q, tight=tight, sdp_checks=sdp_checks,
    )


def conjecture_rows_csv(reports) -> str:
    """CSV with columns d,q,j,K_j(1),min_i K_j(i),argmin i,pass (hypothesis rows)."""
    lines = ["d,q,j,K_j(1),min,argmin,pass"]
    for rep in reports:
        for r in rep.rows:
            if r.in_hypothesis:
                lines.append(
                    f"{r.d},{r.q},{r.j},{r.k_at_one},{r.min_value},{r.argmin},"
                    f"{'1' if r.passed else '0'}"
                )
    return "\n".join(lines) + "\n"

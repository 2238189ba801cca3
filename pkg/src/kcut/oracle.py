"""Exact max-k-cut by exhaustive enumeration at desk scale, plus a
hyperplane-rounding heuristic that turns relaxation solutions into feasible
cuts, and a gap report collecting every bound next to the exact value.

Enumeration is canonical: vertex 0 sits in part 0 and new part labels are
used in increasing order, so each partition into at most k unlabeled parts is
visited exactly once (SUM_{j<=k} S(n,j) states).  For k = 2 a vectorized
bitmask sweep over 2^(n-1) labelings is used instead.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bounds import eigenvalue_bound
from .errors import CapExceeded
from .graphs import Graph, Partition, cut_weight
from .relaxations import RelaxationKind, build, cutting_plane_loop
from .sdp import SdpSolution, SolverOptions, solve

__all__ = [
    "WorkCapExceeded",
    "brute_force_maxkcut",
    "brute_force_table",
    "enumeration_states",
    "hyperplane_round",
    "gap_report",
    "GapReport",
]

DEFAULT_STATE_CAP = 40_000_000
DEFAULT_MASK_CAP = 1 << 28


class WorkCapExceeded(CapExceeded):
    """Enumeration refused; the message carries the estimated state count."""


@lru_cache(maxsize=None)
def _stirling2(n: int, j: int) -> int:
    if j == 0:
        return 1 if n == 0 else 0
    if j > n:
        return 0
    if j == n or j == 1:
        return 1
    return j * _stirling2(n - 1, j) + _stirling2(n - 1, j - 1)


def enumeration_states(n: int, k: int) -> int:
    """Number of canonical labelings visited: partitions into <= k parts."""
    return sum(_stirling2(n, j) for j in range(1, min(k, n) + 1))


def _canonicalize(assignment: np.ndarray, k: int) -> Partition:
    # relabel parts in order of first appearance (vertex 0 -> part 0)
    relabel: dict[int, int] = {}
    out = np.empty_like(assignment)
    for idx, a in enumerate(assignment):
        if int(a) not in relabel:
            relabel[int(a)] = len(relabel)
        out[idx] = relabel[int(a)]
    return Partition(assignment=out, k=k)


def _maxcut_bitmask(g: Graph, mask_cap: int, chunk: int = 1 << 20):
    n = g.n
    total = 1 << (n - 1)
    if total > mask_cap:
        raise WorkCapExceeded(
            f"max-2-cut of n={n} needs 2^{n - 1} = {total} labelings, cap {mask_cap}"
        )
    W = g.weights
    ei, ej = np.nonzero(np.triu(W, 1))
    wts = W[ei, ej]
    best = -1.0
    best_mask = 0
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        masks = np.arange(start, stop, dtype=np.uint64)
        # vertex 0 fixed in part 0; vertex v >= 1 has label bit (v-1)
        bits = np.empty((stop - start, n), dtype=np.uint8)
        bits[:, 0] = 0
        for v in range(1, n):
            bits[:, v] = (masks >> np.uint64(v - 1)).astype(np.uint8) & 1
        cut = np.zeros(stop - start)
        for e in range(ei.size):
            cut += wts[e] * (bits[:, ei[e]] ^ bits[:, ej[e]])
        am = int(np.argmax(cut))
        if cut[am] > best:
            best = float(cut[am])
            best_mask = start + am
    assignment = np.zeros(n, dtype=np.int64)
    for v in range(1, n):
        assignment[v] = (best_mask >> (v - 1)) & 1
    return _canonicalize(assignment, 2), best


def _enumerate_levels(g: Graph, kmax: int):
    """Level-synchronous sweep over canonical labelings.

    Returns (labels, nparts, cut): the full leaf arrays, with ``labels`` of
    shape (num_states, n).  States are generated in lexicographic label
    order, so first-index maxima give the lexicographically smallest optimum.
    """
    n = g.n
    W = g.weights
    labels = np.zeros((1, 1), dtype=np.uint8)
    nparts = np.ones(1, dtype=np.int64)
    cut = np.zeros(1)
    for t in range(1, n):
        S = labels.shape[0]
        wrow = W[t, :t]
        wtot = float(wrow.sum())
        width = min(int(nparts.max()) + 1, kmax)
        # pw[s, p] = weight from vertex t into part p of state s
        pw = np.zeros((S, width))
        for p in range(width):
            pw[:, p] = (labels == p) @ wrow
        nchild = np.minimum(nparts + 1, kmax)
        total = int(nchild.sum())
        idx = np.repeat(np.arange(S), nchild)
        offs = np.arange(total) - np.repeat(np.cumsum(nchild) - nchild, nchild)
        child_part = offs.astype(np.uint8)
        is_new = offs == nparts[idx]
        gain = wtot - np.where(is_new, 0.0, pw[idx, np.minimum(offs, width - 1)])
        labels = np.concatenate([labels[idx], child_part[:, None]], axis=1)
        nparts = nparts[idx] + is_new
        cut = cut[idx] + gain
    return labels, nparts, cut


def brute_force_table(g: Graph, kmax: int, state_cap: int = DEFAULT_STATE_CAP):
    """Best cut per exact part count j = 1..kmax: list of (value, Partition).

    One enumeration serves every k <= kmax, since a max-k-cut is the best
    entry over j <= k.
    """
    kmax = min(kmax, g.n)
    states = enumeration_states(g.n, kmax)
    if states > state_cap:
        raise WorkCapExceeded(
            f"k<={kmax} on n={g.n} needs {states} canonical states, cap {state_cap}"
        )
    labels, nparts, cut = _enumerate_levels(g, kmax)
    table: list[tuple[float, Partition] | None] = [None] * (kmax + 1)
    for j in range(1, kmax + 1):
        sel = np.nonzero(nparts == j)[0]
        if sel.size == 0:
            continue
        am = sel[int(np.argmax(cut[sel]))]
        table[j] = (float(cut[am]), Partition(assignment=labels[am].astype(np.int64), k=kmax))
    return table


def brute_force_maxkcut(
    g: Graph,
    k: int,
    state_cap: int = DEFAULT_STATE_CAP,
    mask_cap: int = DEFAULT_MASK_CAP,
) -> tuple[Partition, float]:
    """Exact max-k-cut of ``g`` with an optimal partition in canonical form.

    Refuses with the estimated work when the enumeration would exceed the
    caps; the practical reach is n ~ 28 for k = 2 and n ~ 14..16 for k >= 3.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    if k == 1:
        return Partition(assignment=np.zeros(g.n, dtype=np.int64), k=1), 0.0
    if k == 2:
        part, val = _maxcut_bitmask(g, mask_cap)
        return part, val
    table = brute_force_table(g, k, state_cap)
    best_j = max(
        (j for j in range(1, k + 1) if table[j] is not None),
        key=lambda j: (table[j][0], -j),
    )
    val, part = table[best_j]
    return Partition(assignment=part.assignment, k=k), val


def hyperplane_round(
    sol: SdpSolution,
    g: Graph,
    k: int,
    trials: int = 100,
    seed: int = 0,
) -> tuple[Partition, float]:
    """Random-vector rounding of a relaxation solution to a feasible cut.

    Y is factored as V^T V after clipping negative eigenvalues; each trial
    draws k standard-normal n-vectors (PCG64 stream seeded with seed + t)
    and assigns every vertex to the argmax inner product with its column of
    V.  The best cut over all trials is returned; same seed, same partition.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    Y = np.asarray(sol.Y, dtype=float)
    w, Q = np.linalg.eigh((Y + Y.T) / 2.0)
    w = np.clip(w, 0.0, None)
    V = (Q * np.sqrt(w)).T  # columns V[:, v] give vertex vectors
    best_val = -1.0
    best_part: Partition | None = None
    for t in range(trials):
        rng = np.random.Generator(np.random.PCG64(seed + t))
        R = rng.standard_normal((k, g.n))
        scores = R @ V
        assignment = np.argmax(scores, axis=0)
        part = _canonicalize(assignment, k)
        val = cut_weight(g, part)
        if val > best_val:
            best_val = val
            best_part = part
    return best_part, best_val


@dataclass(frozen=True)
class GapReport:
    graph: str
    k: int
    rows: tuple[tuple[str, float], ...]
    exact: float | None = None
    meta: dict = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "graph": self.graph,
            "k": self.k,
            "exact": self.exact,
            "bounds": {name: val for name, val in self.rows},
        }
        if self.exact is not None:
            payload["gaps"] = {
                name: {
                    "absolute": val - self.exact,
                    "relative": (val - self.exact) / self.exact if self.exact else None,
                }
                for name, val in self.rows
            }
        return json.dumps(payload, indent=2)

    def to_text(self) -> str:
        lines = [f"graph {self.graph}  k={self.k}"]
        width = max(len(name) for name, _ in self.rows) + 2
        if self.exact is not None:
            lines.append(f"{'exact':<{width}}{self.exact:>14.6f}")
        for name, val in self.rows:
            gap = f"  (+{val - self.exact:.6f})" if self.exact is not None else ""
            lines.append(f"{name:<{width}}{val:>14.6f}{gap}")
        return "\n".join(lines)


def gap_report(
    g: Graph,
    k: int,
    with_cuts: bool = True,
    rounding_trials: int = 200,
    seed: int = 0,
    options: SolverOptions | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> GapReport:
    """Table of exact value, closed-form and solved bounds, and the best
    rounded cut for ``(g, k)``; requires the exact oracle to be feasible."""
    _, exact = brute_force_maxkcut(g, k, state_cap=state_cap)
    rows = []
    rows.append(("eigenvalue_bound", eigenvalue_bound(g, k).value))
    impr = solve(build(g, k, RelaxationKind.PERTURBED_SDP), options)
    rows.append(("perturbed_bound", impr.objective_value))
    main = solve(build(g, k, RelaxationKind.MAIN_SDP), options)
    rows.append(("main_sdp", main.objective_value))
    if with_cuts:
        loop = cutting_plane_loop(
            g, k, families=("triangles", "independent_sets"), options=options
        )
        rows.append(("main_sdp_with_cuts", loop.objective_value))
    _, rounded = hyperplane_round(main, g, k, trials=rounding_trials, seed=seed)
    rows.append(("best_rounded_cut", rounded))
    return GapReport(
        graph=g.name or f"graph(n={g.n})", k=k, rows=tuple(rows), exact=exact
    )

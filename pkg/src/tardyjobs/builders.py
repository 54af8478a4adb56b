"""Solution-vector builders for single-due-date job groups.

All jobs passed to these builders share one due date; the group is then an
ordinary knapsack over processing times, and its solution vector can be
built three ways:

* plain pseudo-polynomial DP over the horizon,
* grouping jobs by equal processing time ``p``: the vector of one such
  class is ``p``-step concave (top weights first, so increments shrink),
  and folding classes with the step-concave engine is near-linear, or
* the weight-indexed mirror: group by equal weight ``w``, fold per-class
  *inverse* vectors (minimum processing time per weight target) with the
  (min,+) step engine, then map the result back if a budget-indexed vector
  is needed.

All three agree entry for entry; the cross-checks live in the test suite.
"""

from __future__ import annotations

import numpy as np

from .core import Job, Vector
from .maxplus import ConvolutionEngine, convolve_sstep_concave, minplus_convolve

__all__ = [
    "build_solution_vector_dp",
    "build_solution_vector_concave",
    "build_inverse_solution_vector",
    "inverse_to_direct",
    "step_concave_class_vector",
    "step_convex_class_vector",
]

_NUMPY_DP_CUTOFF = 4096


def build_solution_vector_dp(jobs: list[Job], horizon: int) -> Vector:
    """Knapsack DP: entry k = max weight of a subset with total p <= k."""
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    if len(jobs) * horizon >= _NUMPY_DP_CUTOFF:
        f = np.zeros(horizon + 1, dtype=np.int64)
        for job in jobs:
            if job.p <= horizon:
                np.maximum(f[job.p :], f[: horizon + 1 - job.p] + job.w, out=f[job.p :])
        return [int(v) for v in f.tolist()]
    f: Vector = [0] * (horizon + 1)
    for job in jobs:
        for k in range(horizon, job.p - 1, -1):
            v = f[k - job.p] + job.w
            if v > f[k]:
                f[k] = v
    return f


def step_concave_class_vector(weights: list[int], p: int, horizon: int) -> Vector:
    """Vector of a class of jobs that all have processing time p.

    Taking t jobs costs t*p time and the best choice is the t largest
    weights, so the vector steps up by sorted-descending weights at each
    multiple of p and is flat in between: a p-step concave vector.
    """
    out: Vector = [0] * (horizon + 1)
    ws = sorted(weights, reverse=True)
    acc = 0
    t = 0
    for k in range(1, horizon + 1):
        if k % p == 0 and t < len(ws):
            acc += ws[t]
            t += 1
        out[k] = acc
    return out


def build_solution_vector_concave(jobs: list[Job], horizon: int) -> Vector:
    """Same output as the DP builder, via per-processing-time concave folds."""
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    classes: dict[int, list[int]] = {}
    for job in jobs:
        if job.p <= horizon:  # longer jobs can never fit
            classes.setdefault(job.p, []).append(job.w)
    acc: Vector = [0] * (horizon + 1)
    for p in sorted(classes):
        bp = step_concave_class_vector(classes[p], p, horizon)
        acc = convolve_sstep_concave(acc, bp, p)
    return acc


def step_convex_class_vector(processing_times: list[int], w: int) -> Vector:
    """Inverse vector of a class of jobs that all have weight w.

    Entry k = minimum total processing time reaching weight >= k; meeting
    a target of k needs ceil(k/w) jobs, cheapest first, so the vector jumps
    right after each multiple of w and its stride-w subsample is convex.
    Horizon is the class's total weight.
    """
    ps = sorted(processing_times)
    out: Vector = [0] * (w * len(ps) + 1)
    acc = 0
    for t, p in enumerate(ps):
        acc += p
        for k in range(t * w + 1, (t + 1) * w + 1):
            out[k] = acc
    return out


def build_inverse_solution_vector(jobs: list[Job]) -> Vector:
    """Inverse vector of a group: entry k = min total p with weight >= k.

    Built by folding the per-weight class vectors with the (min,+) step
    engine.  The due-date cap is not applied here; solvers cap afterwards
    (entries above the cap become POS_INF).  Horizon is the group's total
    weight.
    """
    classes: dict[int, list[int]] = {}
    for job in jobs:
        classes.setdefault(job.w, []).append(job.p)
    acc: Vector = [0]
    for w in sorted(classes):
        bw = step_convex_class_vector(classes[w], w)
        acc = minplus_convolve(acc, bw, ConvolutionEngine.sstep(w))
    return acc


def inverse_to_direct(inv: Vector, horizon: int) -> Vector:
    """Convert an inverse vector back to budget indexing.

    entry[k] = largest weight target whose minimum processing time is <= k.
    Round-trips with the direct builders on the same job group.
    """
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    out: Vector = [0] * (horizon + 1)
    w = 0
    for k in range(horizon + 1):
        while w + 1 < len(inv) and inv[w + 1] <= k:
            w += 1
        out[k] = w
    return out

"""Exhaustive ground truth for small instances.

Used by the test suite to certify every solver and builder, and by the
CLI's verify mode.  ``brute_force`` enumerates early sets in due-date order
with feasibility pruning; ``brute_force_permutations`` enumerates every
processing order outright and exists to confirm that restricting attention
to due-date-ordered early sets loses nothing.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .core import Instance, Job, SolveResult, Vector

__all__ = [
    "edd_feasible",
    "brute_force",
    "brute_force_vector",
    "brute_force_permutations",
]

DEFAULT_CAP = 20


def edd_feasible(early: list[Job]) -> bool:
    """True iff the set can all run early when ordered by due date.

    Sorts by (due date, id) and checks every prefix sum of processing
    times against the corresponding due date.  The empty set is feasible.
    """
    t = 0
    for job in sorted(early, key=lambda j: (j.d, j.id)):
        t += job.p
        if t > job.d:
            return False
    return True


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"instance too large for brute force: n={n} > cap={cap}")


def brute_force(instance: Instance, cap: int = DEFAULT_CAP) -> SolveResult:
    """Exact optimum by enumerating early sets in due-date order.

    Jobs are considered in (due date, id) order, so the running total of
    selected processing times is exactly each selected job's completion
    time; branches that would make a job tardy are pruned.
    """
    _check_cap(instance.n, cap)
    jobs = sorted(instance.jobs, key=lambda j: (j.d, j.id))
    n = len(jobs)
    best_w = 0
    best_ids: tuple[int, ...] = ()

    # iterative DFS over (index, time_used, weight, chosen ids)
    stack = [(0, 0, 0, ())]
    while stack:
        idx, t, w, ids = stack.pop()
        if w > best_w:
            best_w = w
            best_ids = ids
        if idx == n:
            continue
        job = jobs[idx]
        stack.append((idx + 1, t, w, ids))  # job tardy
        if t + job.p <= job.d:  # job early, completes at t + p
            stack.append((idx + 1, t + job.p, w + job.w, ids + (job.id,)))
    return SolveResult(
        min_tardy_weight=instance.w_total - best_w,
        max_early_weight=best_w,
        early_set=tuple(sorted(best_ids)),
    )


def brute_force_vector(jobs: list[Job], horizon: int, cap: int = DEFAULT_CAP) -> Vector:
    """entry[k] = max weight over feasible early sets with total p <= k."""
    _check_cap(len(jobs), cap)
    if horizon < 0:
        raise ValueError(f"horizon must be >= 0, got {horizon}")
    ordered = sorted(jobs, key=lambda j: (j.d, j.id))
    n = len(ordered)
    out: Vector = [0] * (horizon + 1)

    stack = [(0, 0, 0)]
    while stack:
        idx, t, w = stack.pop()
        if w > out[t]:
            out[t] = w
        if idx == n:
            continue
        job = ordered[idx]
        stack.append((idx + 1, t, w))
        nt = t + job.p
        if nt <= job.d and nt <= horizon:
            stack.append((idx + 1, nt, w + job.w))
    for k in range(1, horizon + 1):
        if out[k] < out[k - 1]:
            out[k] = out[k - 1]
    return out


_PERM_CACHE: dict[int, np.ndarray] = {}


def _perm_matrix(n: int) -> np.ndarray:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = np.array(list(permutations(range(n))), dtype=np.int64)
    return _PERM_CACHE[n]


def brute_force_permutations(instance: Instance, cap: int = 8) -> SolveResult:
    """Exact optimum over every processing order of all n jobs.

    Vectorized over the n! permutations: a job is early in an order iff its
    running completion time is within its due date.  Exponentially more
    work than :func:`brute_force`; only for validating that due-date-ordered
    enumeration is lossless.
    """
    _check_cap(instance.n, cap)
    jobs = list(instance.jobs)
    perms = _perm_matrix(len(jobs))
    p = np.array([j.p for j in jobs], dtype=np.int64)
    w = np.array([j.w for j in jobs], dtype=np.int64)
    d = np.array([j.d for j in jobs], dtype=np.int64)
    completion = np.cumsum(p[perms], axis=1)
    early = completion <= d[perms]
    best = int((w[perms] * early).sum(axis=1).max())
    return SolveResult(min_tardy_weight=instance.w_total - best, max_early_weight=best)

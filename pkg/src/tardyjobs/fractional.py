"""Fractional relaxation of the weighted-tardy-jobs problem.

In the relaxation each job may be scheduled to an arbitrary fraction
``0 <= x_j <= 1``, subject to the per-due-date load constraints
``sum_{d_k <= d_j} p_k * x_k <= d_j`` for every job ``j``.  The *fractional
solution vector* maps each processing-time budget ``k`` to the maximum
fractional early weight achievable within budget ``k``.  It dominates the
integral solution vector entry-wise, and the gap is at most
``d_hash * w_max`` because at most one job per due date ends up fractional
(see :func:`fractional_gap_check`).  The prediction module uses these
vectors as a cheap predictor of where near-optimal convolution splits lie.

Entries are exact rationals stored as integers scaled by the lcm of the
processing times; floating point never enters any comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, Job

__all__ = [
    "FractionalSolutionVector",
    "wspt_sort",
    "fractional_solution_vector",
    "fractional_gap_check",
]


@dataclass(frozen=True)
class FractionalSolutionVector:
    """Fractional early-weight optima per processing-time budget.

    ``scaled[k] / scale`` is the exact value at budget k; ``scale`` is the
    lcm of the instance's processing times so every entry is integral after
    scaling.  ``units``, when tracked, maps job id to the number of unit
    slices the greedy schedule took from that job (``units[j] / p_j`` is
    the implicit fractional assignment ``x_j``).
    """

    scaled: tuple[int, ...]
    scale: int
    units: dict[int, int] | None = None

    def __len__(self) -> int:
        return len(self.scaled)

    def value(self, k: int) -> Fraction:
        return Fraction(self.scaled[k], self.scale)

    def values(self) -> list[Fraction]:
        return [Fraction(v, self.scale) for v in self.scaled]


def wspt_sort(jobs: list[Job]) -> list[Job]:
    """Sort jobs by non-increasing weight-to-processing-time ratio.

    Ratios are compared exactly (no floating point); ties keep id order.
    """
    return sorted(jobs, key=lambda j: (Fraction(-j.w, j.p), j.id))


def fractional_solution_vector(
    instance: Instance, *, track_units: bool = False
) -> FractionalSolutionVector:
    """Greedy fractional solution vector over budgets 0..d_max.

    Jobs are taken in WSPT order, one unit of processing per budget step.
    A unit of the current job is admitted only while the job has processing
    time left and no due date at or after the job's own would be overloaded;
    otherwise the scan advances to the next job and retries the same budget.
    Once jobs run out, remaining entries repeat the last value.

    The due-date slack needed by the admission test is kept as a running
    suffix minimum: each admitted unit lowers it by one, and it is recomputed
    only when the scan advances to the next job.
    """
    grouping_dates = sorted({j.d for j in instance.jobs})
    date_index = {d: i for i, d in enumerate(grouping_dates)}
    m = len(grouping_dates)
    load = [0] * m  # p^(i): units placed against due date i or earlier

    jobs = wspt_sort(list(instance.jobs))
    scale = math.lcm(*(j.p for j in jobs))
    d_max = instance.d_max

    scaled = [0] * (d_max + 1)
    units: dict[int, int] = {j.id: 0 for j in jobs} if track_units else None

    def suffix_slack(i: int) -> int:
        return min(grouping_dates[t] - load[t] for t in range(i, m))

    j = 0
    cur = jobs[0]
    cur_i = date_index[cur.d]
    cur_rate = cur.w * (scale // cur.p)  # w_j/p_j, scaled
    taken = 0  # units taken from the current job
    slack = suffix_slack(cur_i)

    for k in range(1, d_max + 1):
        while j < len(jobs) and (cur.p - taken <= 0 or slack <= 0):
            j += 1
            if j < len(jobs):
                cur = jobs[j]
                cur_i = date_index[cur.d]
                cur_rate = cur.w * (scale // cur.p)
                taken = 0
                slack = suffix_slack(cur_i)
        if j >= len(jobs):
            # remaining budgets add nothing (ratio-0 padding)
            for k2 in range(k, d_max + 1):
                scaled[k2] = scaled[k2 - 1]
            break
        scaled[k] = scaled[k - 1] + cur_rate
        taken += 1
        slack -= 1
        for t in range(cur_i, m):
            load[t] += 1
        if track_units:
            units[cur.id] += 1

    return FractionalSolutionVector(scaled=tuple(scaled), scale=scale, units=units)


def fractional_gap_check(
    frac: FractionalSolutionVector, integral, d_hash: int, w_max: int
) -> bool:
    """True iff ``0 <= frac[k] - integral[k] <= d_hash * w_max`` for all k.

    ``integral`` is a plain solution vector on the same horizon; comparisons
    are exact via the scaled representation.
    """
    if len(frac) != len(integral):
        raise ValueError(f"length mismatch: fractional {len(frac)} vs integral {len(integral)}")
    bound = d_hash * w_max * frac.scale
    for k in range(len(integral)):
        gap = frac.scaled[k] - integral[k] * frac.scale
        if gap < 0 or gap > bound:
            return False
    return True

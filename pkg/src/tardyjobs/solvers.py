"""End-to-end exact solvers for the weighted-tardy-jobs problem.

Two families:

* :func:`lawler_moore` -- the classic O(n * d_max) dynamic program over
  jobs in due-date order, used as the baseline and as the reconstruction
  backend.
* :func:`solve_maxplus` -- partition jobs by due date, build a solution
  vector per group, and merge the groups in due-date order with
  (max,+)-convolutions.  After merging group i the accumulator entry k
  holds the best early weight achievable from the first i groups within
  processing budget k, so the last entry of the final accumulator is the
  optimum.  The policy picks how each merge is computed:

  - ``MAXPLUS_NAIVE``: quadratic convolution per merge.
  - ``PREDICTION``: per merge, build fractional solution vectors for the
    merged prefix, the incoming group, and their union; derive range
    intervals from them and run the range-guided convolution.
  - ``CONCAVE_BY_P``: split each group by processing time and fold the
    step-concave per-class vectors.
  - ``INVERSE_BY_W``: run the whole merge chain in the weight-indexed
    (min,+) mirror, folding per-weight classes, capping entries above each
    group's due date; falls back to Lawler-Moore when n >= d_max, where
    the baseline is at least as fast.
  - ``AUTO``: pick a policy from the instance's size parameters.

Every policy returns the exact optimum; they differ only in running time.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator

import numpy as np

from .builders import (
    build_solution_vector_concave,
    build_solution_vector_dp,
    step_concave_class_vector,
    step_convex_class_vector,
)
from .core import (
    NEG_INF,
    POS_INF,
    DueDateGrouping,
    Instance,
    Job,
    SolveResult,
    Vector,
    group_by_due_date,
)
from .fractional import fractional_solution_vector
from .maxplus import (
    ConvolutionEngine,
    convolve_naive,
    convolve_sstep_concave,
    convolve_with_ranges,
    minplus_convolve,
)
from .oracle import brute_force_vector, edd_feasible
from .prediction import compute_range_intervals

__all__ = [
    "SolverPolicy",
    "DEFAULT_CALIBRATION",
    "lawler_moore",
    "solve_maxplus",
    "solve",
    "forward_states",
    "auto_select",
    "prefix_vector_semantics_check",
    "reconstruct_schedule",
]

_NUMPY_DP_CUTOFF = 4096


class SolverPolicy(Enum):
    LAWLER_MOORE = "lawler-moore"
    MAXPLUS_NAIVE = "naive"
    PREDICTION = "prediction"
    CONCAVE_BY_P = "concave-p"
    INVERSE_BY_W = "inverse-w"
    AUTO = "auto"


def lawler_moore(instance: Instance) -> SolveResult:
    """Baseline DP: jobs in due-date order, state = exact early processing time.

    A job can join the early set only while its completion time stays within
    its due date, so states above d_j never gain job j.  O(n * d_max).
    """
    jobs = sorted(instance.jobs, key=lambda j: (j.d, j.id))
    d_max = instance.d_max
    if instance.n * d_max >= _NUMPY_DP_CUTOFF and instance.w_total < 2**52:
        f = np.full(d_max + 1, NEG_INF)
        f[0] = 0.0
        for job in jobs:
            if job.p > job.d:  # can never be early
                continue
            hi = job.d
            np.maximum(f[job.p : hi + 1], f[: hi + 1 - job.p] + job.w, out=f[job.p : hi + 1])
        best = int(f.max())
    else:
        f: Vector = [NEG_INF] * (d_max + 1)
        f[0] = 0
        for job in jobs:
            for k in range(job.d, job.p - 1, -1):
                v = f[k - job.p] + job.w
                if v > f[k]:
                    f[k] = v
        best = int(max(f))
    return SolveResult(min_tardy_weight=instance.w_total - best, max_early_weight=best)


def _group_vector(jobs: tuple[Job, ...], horizon: int, policy: SolverPolicy) -> Vector:
    if policy is SolverPolicy.CONCAVE_BY_P:
        return build_solution_vector_concave(list(jobs), horizon)
    return build_solution_vector_dp(list(jobs), horizon)


def _extend(vec: Vector, horizon: int) -> Vector:
    """Pad a monotone vector with its last value up to the given horizon."""
    if len(vec) >= horizon + 1:
        return vec
    return list(vec) + [vec[-1]] * (horizon + 1 - len(vec))


def forward_states(instance: Instance, policy: SolverPolicy) -> Iterator[tuple[int, Vector]]:
    """Yield (i, accumulator) after merging each due-date group.

    The accumulator after iteration i spans budgets 0..d^(i) and holds the
    best early weight of the first i groups per budget.  Introspection
    surface for tests and demos; :func:`solve_maxplus` consumes it.
    """
    grouping = group_by_due_date(instance)
    dates, groups = grouping.due_dates, grouping.groups

    acc = _group_vector(groups[0], dates[0], policy)
    yield 1, acc
    prefix_jobs = list(groups[0])

    for i in range(2, len(dates) + 1):
        d_i = dates[i - 1]
        grp = groups[i - 1]
        if policy is SolverPolicy.MAXPLUS_NAIVE:
            acc = convolve_naive(acc, build_solution_vector_dp(list(grp), d_i))
        elif policy is SolverPolicy.PREDICTION:
            b_vec = build_solution_vector_dp(list(grp), d_i)
            union = prefix_jobs + list(grp)
            a_frac = fractional_solution_vector(Instance(tuple(prefix_jobs)))
            b_frac = fractional_solution_vector(Instance(tuple(grp)))
            c_frac = fractional_solution_vector(Instance(tuple(union)))
            ranges = compute_range_intervals(a_frac, b_frac, c_frac, i, instance.w_max)
            acc = convolve_with_ranges(acc, b_vec, ranges)
        elif policy is SolverPolicy.CONCAVE_BY_P:
            acc = _extend(acc, d_i)
            classes: dict[int, list[int]] = {}
            for job in grp:
                if job.p <= d_i:
                    classes.setdefault(job.p, []).append(job.w)
            for p in sorted(classes):
                bp = step_concave_class_vector(classes[p], p, d_i)
                acc = convolve_sstep_concave(acc, bp, p)
        else:
            raise ValueError(f"forward merge does not apply to policy {policy}")
        prefix_jobs.extend(grp)
        yield i, acc


def _solve_inverse(instance: Instance, grouping: DueDateGrouping) -> SolveResult:
    """Weight-indexed (min,+) mirror of the merge chain."""
    acc: Vector = [0]
    for d_i, grp in zip(grouping.due_dates, grouping.groups):
        classes: dict[int, list[int]] = {}
        for job in grp:
            classes.setdefault(job.w, []).append(job.p)
        for w in sorted(classes):
            bw = step_convex_class_vector(classes[w], w)
            acc = minplus_convolve(acc, bw, ConvolutionEngine.sstep(w))
        # entries needing more time than this due date are infeasible from here on
        acc = [v if v <= d_i else POS_INF for v in acc]
    best = 0
    for k in range(len(acc) - 1, -1, -1):
        if acc[k] != POS_INF:
            best = k
            break
    return SolveResult(min_tardy_weight=instance.w_total - best, max_early_weight=best)


def solve_maxplus(instance: Instance, policy: SolverPolicy) -> SolveResult:
    """Exact optimum via due-date-group merging under the given policy."""
    if policy is SolverPolicy.AUTO:
        policy = auto_select(instance)
    if policy is SolverPolicy.LAWLER_MOORE:
        return lawler_moore(instance)
    if policy is SolverPolicy.INVERSE_BY_W:
        if instance.n >= instance.d_max:
            return lawler_moore(instance)
        return _solve_inverse(instance, group_by_due_date(instance))
    acc: Vector = []
    for _, acc in forward_states(instance, policy):
        pass
    best = int(acc[-1])
    return SolveResult(min_tardy_weight=instance.w_total - best, max_early_weight=best)


DEFAULT_CALIBRATION: dict[SolverPolicy, float] = {
    SolverPolicy.LAWLER_MOORE: 1.0,
    SolverPolicy.MAXPLUS_NAIVE: 1.0,
    SolverPolicy.PREDICTION: 1.0,
    SolverPolicy.CONCAVE_BY_P: 1.0,
    SolverPolicy.INVERSE_BY_W: 1.0,
}


def auto_select(
    instance: Instance, calibration: dict[SolverPolicy, float] | None = None
) -> SolverPolicy:
    """Pick the policy with the smallest estimated operation count.

    Estimates follow each policy's asymptotic cost in the instance
    parameters; the calibration mapping scales them per policy (constant
    factors are configuration, not code).  Ties go to the earlier policy
    in declaration order.
    """
    cal = DEFAULT_CALIBRATION if calibration is None else {**DEFAULT_CALIBRATION, **calibration}
    n, dm, dh = instance.n, instance.d_max, instance.d_hash
    pm, wm = instance.p_max, instance.w_max
    estimates = [
        (SolverPolicy.LAWLER_MOORE, n * dm),
        (SolverPolicy.MAXPLUS_NAIVE, n + dh * dm * dm),
        (SolverPolicy.PREDICTION, dh * n + dh * dh * dm * wm),
        (SolverPolicy.CONCAVE_BY_P, dh * n + dh * dm * pm),
        (
            SolverPolicy.INVERSE_BY_W,
            n * dm if n >= dm else n * n + dm * wm * wm,
        ),
    ]
    best_policy, best_cost = estimates[0][0], cal[estimates[0][0]] * estimates[0][1]
    for policy, est in estimates[1:]:
        cost = cal[policy] * est
        if cost < best_cost:
            best_policy, best_cost = policy, cost
    return best_policy


def solve(
    instance: Instance,
    policy: SolverPolicy = SolverPolicy.AUTO,
    *,
    reconstruct: bool = False,
    calibration: dict[SolverPolicy, float] | None = None,
) -> SolveResult:
    """Solve an instance; optionally attach a witness early set."""
    resolved = auto_select(instance, calibration) if policy is SolverPolicy.AUTO else policy
    result = solve_maxplus(instance, resolved)
    if reconstruct:
        early = reconstruct_schedule(instance, result.max_early_weight)
        result = SolveResult(
            min_tardy_weight=result.min_tardy_weight,
            max_early_weight=result.max_early_weight,
            early_set=tuple(early),
        )
    return result


def prefix_vector_semantics_check(instance: Instance, i: int, acc: Vector) -> bool:
    """True iff acc matches the brute-force optima of the first i groups.

    Test-only: checks that the merge accumulator after iteration i equals,
    entry for entry, the exhaustive optimum over the union of the first i
    due-date groups at each budget.
    """
    grouping = group_by_due_date(instance)
    prefix: list[Job] = []
    for g in grouping.groups[:i]:
        prefix.extend(g)
    expected = brute_force_vector(prefix, len(acc) - 1)
    return list(acc) == expected


def reconstruct_schedule(instance: Instance, target_weight: int) -> list[int]:
    """Recover an early set of exactly the given optimal weight.

    Re-runs the baseline DP with one layer per job and walks the layers
    backwards.  Raises if the target is not the DP optimum (a solver bug),
    or if the recovered set fails verification.
    """
    jobs = sorted(instance.jobs, key=lambda j: (j.d, j.id))
    d_max = instance.d_max
    layers: list[Vector] = [[0] + [NEG_INF] * d_max]
    for job in jobs:
        prev = layers[-1]
        cur = list(prev)
        for k in range(job.p, job.d + 1):
            v = prev[k - job.p] + job.w
            if v > cur[k]:
                cur[k] = v
        layers.append(cur)
    final = layers[-1]
    best = max(final)
    if target_weight != best:
        raise ValueError(f"no early set of weight {target_weight}: the optimum is {best}")
    k = final.index(best)
    chosen: list[Job] = []
    for idx in range(len(jobs) - 1, -1, -1):
        if layers[idx + 1][k] != layers[idx][k]:
            job = jobs[idx]
            chosen.append(job)
            k -= job.p
    early_ids = sorted(j.id for j in chosen)
    if sum(j.w for j in chosen) != target_weight or not edd_feasible(chosen):
        raise RuntimeError("reconstructed early set failed verification")
    return early_ids

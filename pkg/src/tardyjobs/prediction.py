"""Range intervals: predicting where near-optimal convolution splits lie.

Given fractional solution vectors ``A'``, ``B'`` for two job sets and ``C'``
for their union, the gap ``delta_k(l) = C'[k+l] - A'[k] - B'[l]`` measures
how far the split ``(k, l)`` is from fractionally optimal.  For each left
index ``k`` the set of ``l`` with a small gap is a contiguous interval
``[x_k, y_k]`` (the gap is unimodal in ``l``), and both endpoints are
non-decreasing in ``k``, so a single two-pointer sweep recovers all
intervals in linear time.

With the threshold ``2*i*w_max`` (``i`` the merge iteration, ``w_max`` the
maximum job weight), these intervals are *range intervals* for the integral
vectors ``A`` and ``B`` with additive error ``e = 4*i*w_max``:

1. every in-range split is within ``e`` of optimal,
2. every output index has an exactly-optimal split inside its range, and
3. interval endpoints are monotone.

Condition 2 is what makes the range-guided convolution exact.
:func:`validate_range_intervals` checks all three conditions literally
against the naive convolution; the test suite leans on it heavily.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Vector
from .fractional import FractionalSolutionVector
from .maxplus import convolve_naive

__all__ = [
    "RangeIntervals",
    "compute_range_intervals",
    "validate_range_intervals",
    "delta",
]


@dataclass(frozen=True)
class RangeIntervals:
    """Per-left-index candidate ranges ``[x_k, y_k]`` with additive error.

    An entry may be ``None``: a flagged-empty range for a left index that
    can never participate in an optimal split (its fractional gap exceeds
    the threshold at every budget).  Convolution and validation skip such
    indices; exactness is unaffected because an optimal split's gap is at
    most half the admission threshold, so witnesses always land in
    non-empty ranges.
    """

    intervals: tuple[tuple[int, int] | None, ...]
    error: int


def _rescaled(
    a: FractionalSolutionVector,
    b: FractionalSolutionVector,
    c: FractionalSolutionVector,
) -> tuple[list[int], list[int], list[int], int]:
    scale = math.lcm(a.scale, b.scale, c.scale)
    return (
        [v * (scale // a.scale) for v in a.scaled],
        [v * (scale // b.scale) for v in b.scaled],
        [v * (scale // c.scale) for v in c.scaled],
        scale,
    )


def compute_range_intervals(
    a_frac: FractionalSolutionVector,
    b_frac: FractionalSolutionVector,
    c_frac: FractionalSolutionVector,
    i: int,
    w_max: int,
) -> RangeIntervals:
    """Sweep out the range intervals of A in B from the fractional vectors.

    ``c_frac`` must belong to the union of the two job sets, so that the
    common rescaling is exact.  ``i`` is the merge iteration; the admission
    threshold is ``2*i*w_max`` and the certified error is ``4*i*w_max``.
    Both pointers only ever move forward.  Budget indices past ``C'``'s
    horizon count as out of range (gap treated as infinite).

    A left index whose gap exceeds the threshold at every budget (which
    happens when the left side's jobs saturate far below its horizon while
    the union keeps absorbing work) gets a flagged-empty range; the shared
    pointers are not advanced past it.
    """
    if len(a_frac) == 0 or len(b_frac) == 0 or len(c_frac) == 0:
        raise ValueError("empty fractional vector")
    if i < 1:
        raise ValueError(f"iteration index must be >= 1, got {i}")
    av, bv, cv, scale = _rescaled(a_frac, b_frac, c_frac)
    threshold = 2 * i * w_max * scale

    n_b = len(bv)
    n_c = len(cv)

    def gap_ok(k: int, l: int) -> bool:
        kl = k + l
        if kl >= n_c:
            return False
        return cv[kl] - av[k] - bv[l] <= threshold

    intervals: list[tuple[int, int] | None] = []
    x = y = 0
    prev_empty = False
    for k in range(len(av)):
        if prev_empty and k > 0 and av[k] == av[k - 1]:
            # the gap only grows once the left side saturates; still empty
            intervals.append(None)
            continue
        scan = x
        while scan < n_b and not gap_ok(k, scan):
            scan += 1
        if scan >= n_b:  # no budget within threshold: flagged-empty range
            intervals.append(None)
            prev_empty = True
            continue
        prev_empty = False
        x = scan
        if y < x:  # y stays one past the last qualifying index
            y = x
        while y < n_b and gap_ok(k, y):
            y += 1
        if y - 1 < x:
            raise ValueError(f"inconsistent range interval at k={k}: x={x}, y={y - 1}")
        intervals.append((x, y - 1))
    return RangeIntervals(intervals=tuple(intervals), error=4 * i * w_max)


def validate_range_intervals(A: Vector, B: Vector, R: RangeIntervals) -> list[str]:
    """Check the three range-interval conditions literally; violations are data.

    Computes the naive convolution C and verifies, with e = R.error:
    (1) in-range splits are within e of C, (2) every output index has an
    exactly-optimal in-range split, (3) endpoints are monotone.  Structural
    problems (wrong count, out-of-bounds endpoints) are reported the same
    way rather than raised.
    """
    violations: list[str] = []
    intervals = list(R.intervals)
    if len(intervals) != len(A):
        return [f"expected {len(A)} intervals, got {len(intervals)}"]
    for k, iv in enumerate(intervals):
        if iv is None:  # flagged empty: inert everywhere
            continue
        x, y = iv
        if not (0 <= x <= y <= len(B) - 1):
            violations.append(f"interval {k} out of bounds: [{x}, {y}]")
    if violations:
        return violations

    e = R.error
    C = convolve_naive(A, B)

    for k, iv in enumerate(intervals):
        if iv is None:
            continue
        x, y = iv
        for l in range(x, y + 1):
            kl = k + l
            if kl >= len(C):
                continue
            if A[k] + B[l] < C[kl] - e:
                violations.append(
                    f"condition-1 violation at k={k}, l={l}: "
                    f"{A[k]}+{B[l]} < {C[kl]}-{e}"
                )
    for l in range(len(C)):
        found = False
        for k in range(min(l, len(A) - 1), -1, -1):
            j = l - k
            if j >= len(B):
                break
            iv = intervals[k]
            if iv is None:
                continue
            x, y = iv
            if x <= j <= y and A[k] + B[j] == C[l]:
                found = True
                break
        if not found:
            violations.append(f"condition-2 violation at l={l}: no in-range optimal split")
    prev = None
    for k, iv in enumerate(intervals):
        if iv is None:
            continue
        if prev is not None and (iv[0] < prev[0] or iv[1] < prev[1]):
            violations.append(f"condition-3 violation at k={k}: endpoints not monotone")
        prev = iv
    return violations


def delta(
    a_frac: FractionalSolutionVector,
    b_frac: FractionalSolutionVector,
    c_frac: FractionalSolutionVector,
    k: int,
    l: int,
) -> Fraction:
    """Exact fractional gap ``C'[k+l] - (A'[k] + B'[l])`` of one split."""
    if not (0 <= k < len(a_frac)) or not (0 <= l < len(b_frac)) or k + l >= len(c_frac):
        raise ValueError(f"split (k={k}, l={l}) out of range")
    return c_frac.value(k + l) - a_frac.value(k) - b_frac.value(l)

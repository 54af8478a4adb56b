"""Interchangeable (max,+)- and (min,+)-convolution engines.

The (max,+)-convolution of vectors ``A`` and ``B`` is the vector ``C`` with
``C[l] = max_k (A[k] + B[l-k])`` over all index pairs that are valid in both
operands.  Every engine here computes exactly the same output as the naive
quadratic evaluation; the structured engines are merely faster when their
precondition on the operands holds:

* ``convolve_naive``          -- no precondition, O(|A|*|B|).
* ``convolve_sstep_concave``  -- right operand is s-step concave; near-linear
                                 via sliding-window maxima plus a monotone
                                 argmax (matrix-searching) pass per residue
                                 class modulo s.
* ``convolve_with_ranges``    -- guided by per-index ranges ``[x_k, y_k]``
                                 certifying where optimal split witnesses
                                 lie; cost proportional to the total range
                                 width.
* bounded-monotone plugin     -- an engine slot for externally supplied
                                 subquadratic routines for monotone vectors
                                 with bounded values; the default delegate
                                 validates the structure and falls back to
                                 the naive engine.

Outputs are truncated at the longer operand's length: the scheduling solvers
never need entries past the current horizon, and monotone non-negative
operands make the truncation lossless for later convolutions.  The (min,+)
mirror used by inverse (weight-indexed) vectors instead keeps the full
``|A|+|B|-1`` output, because weight targets add up across operands.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Callable, Sequence

import numpy as np

from .core import NEG_INF, POS_INF, Vector

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, typing only
    from .prediction import RangeIntervals

__all__ = [
    "EngineKind",
    "ConvolutionEngine",
    "convolve_naive",
    "convolve_sstep_concave",
    "convolve_with_ranges",
    "minplus_convolve",
    "is_sstep_concave",
    "is_sstep_convex",
    "is_bounded_monotone",
]

# Below this |A|*|B| product the structured engines just run the naive
# evaluation: the asymptotics only pay off past it.  Tests shrink it to 0 to
# force the structured code paths on small inputs.
SMALL_PRODUCT_CUTOFF = 4096

# Sums of finite entries must stay exactly representable in float64 for the
# vectorized paths; anything bigger falls back to pure-Python big ints.
_EXACT_FLOAT_BOUND = 2**52


def _max_abs_finite(v: Sequence) -> int:
    m = 0
    for x in v:
        if x != NEG_INF and x != POS_INF:
            a = -x if x < 0 else x
            if a > m:
                m = a
    return m


def _numpy_ok(A: Sequence, B: Sequence) -> bool:
    return _max_abs_finite(A) + _max_abs_finite(B) < _EXACT_FLOAT_BOUND


def _from_float(v: float) -> int | float:
    if v == NEG_INF:
        return NEG_INF
    if v == POS_INF:
        return POS_INF
    return int(v)


def convolve_naive(A: Vector, B: Vector, *, full_length: bool = False) -> Vector:
    """(max,+)-convolve two vectors by direct evaluation of the definition.

    The output has ``max(|A|, |B|)`` entries (``|A|+|B|-1`` with
    ``full_length=True``); operand indices out of range contribute nothing.
    Entries equal to ``NEG_INF`` saturate.
    """
    if len(A) == 0 or len(B) == 0:
        raise ValueError("empty input vector")
    L = len(A) + len(B) - 1 if full_length else max(len(A), len(B))
    if len(A) > len(B):  # loop over the shorter operand
        A, B = B, A
    if len(A) * min(len(B), L) >= SMALL_PRODUCT_CUTOFF and _numpy_ok(A, B):
        b = np.asarray(B, dtype=np.float64)
        out = np.full(L, NEG_INF)
        for k, a in enumerate(A):
            if a == NEG_INF or k >= L:
                continue
            hi = min(len(B), L - k)
            np.maximum(out[k : k + hi], a + b[:hi], out=out[k : k + hi])
        return [_from_float(v) for v in out.tolist()]
    out_py: Vector = [NEG_INF] * L
    for k, a in enumerate(A):
        if a == NEG_INF or k >= L:
            continue
        hi = min(len(B), L - k)
        for j in range(hi):
            v = a + B[j]
            if v > out_py[k + j]:
                out_py[k + j] = v
    return out_py


# ---------------------------------------------------------------------------
# s-step concave engine
# ---------------------------------------------------------------------------


def _first_sstep_concave_violation(B: Sequence, s: int) -> int | None:
    """Index of the first entry breaking the s-step concave structure.

    Structure: the stride-s subsample B[0], B[s], B[2s], ... has
    non-increasing consecutive differences, and every off-stride entry
    copies its predecessor.  Sentinel entries are not step-structured.
    """
    for i, v in enumerate(B):
        if v == NEG_INF or v == POS_INF:
            return i
    for l in range(1, len(B)):
        if l % s != 0:
            if B[l] != B[l - 1]:
                return l
        elif l >= 2 * s:
            if B[l] - B[l - s] > B[l - s] - B[l - 2 * s]:
                return l
    return None


def is_sstep_concave(B: Vector, s: int) -> bool:
    """True iff the stride-s subsample of B is concave and off-stride
    entries copy their predecessor."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return _first_sstep_concave_violation(B, s) is None


def _first_sstep_convex_violation(B: Sequence, s: int) -> int | None:
    """Mirror of the concave check for (min,+) step vectors.

    Structure: the stride-s subsample is convex (non-decreasing consecutive
    differences) and every off-stride entry copies its *successor*, i.e.
    ``B[l] = B[s*ceil(l/s)]``.  This forces the last index to be a multiple
    of s.
    """
    for i, v in enumerate(B):
        if v == NEG_INF or v == POS_INF:
            return i
    for l in range(1, len(B)):
        if l % s != 0:
            if l + 1 >= len(B) or B[l] != B[l + 1]:
                return l
        elif l >= 2 * s:
            if B[l] - B[l - s] < B[l - s] - B[l - 2 * s]:
                return l
    return None


def is_sstep_convex(B: Vector, s: int) -> bool:
    """(min,+) mirror of :func:`is_sstep_concave`: convex stride subsample,
    off-stride entries copy their successor."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return _first_sstep_convex_violation(B, s) is None


def _window_max_ending(A: Sequence, width: int, length: int) -> list:
    """out[m] = max(A[m-width+1 .. m] clipped to A's range), NEG_INF if empty.

    Monotone-deque sliding maximum; O(length).
    """
    out = [NEG_INF] * length
    dq: deque[int] = deque()
    for m in range(length):
        if m < len(A):
            while dq and A[dq[-1]] <= A[m]:
                dq.pop()
            dq.append(m)
        lo = m - width + 1
        while dq and dq[0] < lo:
            dq.popleft()
        if dq:
            out[m] = A[dq[0]]
    return out


def _window_min_starting(A: Sequence, width: int, length: int) -> list:
    """out[m] = min(A[m .. m+width-1] clipped to A's range) for
    m in [-(width-1), length-1], POS_INF if empty.

    Returned list is offset by width-1: entry i holds the value at
    m = i - (width - 1).
    """
    total = length + width - 1
    out = [POS_INF] * total
    dq: deque[int] = deque()
    for m in range(length - 1, -width, -1):
        if 0 <= m < len(A):
            while dq and A[dq[-1]] >= A[m]:
                dq.pop()
            dq.append(m)
        hi = m + width - 1
        while dq and dq[0] > hi:
            dq.popleft()
        if dq:
            out[m + width - 1] = A[dq[0]]
    return out


def _monotone_argmax(
    n_rows: int,
    value: Callable[[int, int], float],
    bounds: Callable[[int], tuple[int, int]],
) -> list[int]:
    """Leftmost argmax per row for matrices whose leftmost row argmax is
    non-decreasing in the row index (divide and conquer on rows).

    ``bounds(row)`` gives the inclusive valid column range of that row;
    both endpoints must be non-decreasing in the row.
    """
    out = [0] * n_rows

    def rec(r0: int, r1: int, c0: int, c1: int) -> None:
        if r0 > r1:
            return
        mid = (r0 + r1) // 2
        lo, hi = bounds(mid)
        lo = max(lo, c0)
        hi = min(hi, c1)
        if lo > hi:
            raise RuntimeError("monotone argmax: empty column window")
        best_c = lo
        best = value(mid, lo)
        for c in range(lo + 1, hi + 1):
            v = value(mid, c)
            if v > best:
                best, best_c = v, c
        out[mid] = best_c
        rec(r0, mid - 1, c0, best_c)
        rec(mid + 1, r1, best_c, c1)

    rec(0, n_rows - 1, -(1 << 62), 1 << 62)
    return out


def convolve_sstep_concave(A: Vector, B: Vector, s: int) -> Vector:
    """(max,+)-convolve where the right operand is s-step concave.

    Output equals ``convolve_naive(A, B)`` entry for entry, computed in
    near-linear time: for each residue class of the output index modulo s,
    candidate splits reduce to sliding-window maxima of A combined with the
    concave stride subsample of B, whose row optima are found by a monotone
    argmax search.  Ties break toward the smaller split index.
    """
    if len(A) == 0 or len(B) == 0:
        raise ValueError("empty input vector")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    bad = _first_sstep_concave_violation(B, s)
    if bad is not None:
        raise ValueError(f"right operand is not {s}-step concave: first violation at index {bad}")
    L = max(len(A), len(B))
    if len(A) * len(B) <= SMALL_PRODUCT_CUTOFF or any(
        v == NEG_INF or v == POS_INF for v in A
    ):
        return convolve_naive(A, B)

    Bc = list(B[::s])  # concave stride subsample
    last_t = len(Bc) - 1
    out: Vector = [NEG_INF] * L

    # The final step of B may span fewer than s entries; it is handled as a
    # single direct candidate so the matrix part sees only full windows.
    last_width = len(B) - last_t * s
    d_last = _window_max_ending(A, last_width, L - last_t * s)
    base = Bc[last_t]
    for m, v in enumerate(d_last):
        if v != NEG_INF:
            out[last_t * s + m] = base + v

    if last_t > 0:
        d_full = _window_max_ending(A, s, L)
        for r in range(min(s, L)):
            E = d_full[r::s]
            n_rows = len(E)

            def value(q: int, u: int, E=E, Bc=Bc) -> float:
                return E[u] + Bc[q - u]

            def bounds(q: int, last_t=last_t, n_cols=len(E)) -> tuple[int, int]:
                return max(0, q - last_t + 1), min(q, n_cols - 1)

            args = _monotone_argmax(n_rows, value, bounds)
            for q, u in enumerate(args):
                v = E[u] + Bc[q - u]
                l = q * s + r
                if v > out[l]:
                    out[l] = v
    return out


# ---------------------------------------------------------------------------
# range-guided engine
# ---------------------------------------------------------------------------


def _check_interval_structure(
    intervals: Sequence[tuple[int, int] | None], n_a: int, n_b: int
) -> None:
    if len(intervals) != n_a:
        raise ValueError(f"expected {n_a} intervals (one per left-operand index), got {len(intervals)}")
    prev_x = prev_y = 0
    for k, iv in enumerate(intervals):
        if iv is None:  # flagged empty: the index never holds a witness
            continue
        x, y = iv
        if not (0 <= x <= y <= n_b - 1):
            raise ValueError(f"interval {k} out of bounds: [{x}, {y}] not within [0, {n_b - 1}]")
        if x < prev_x or y < prev_y:
            raise ValueError(f"interval endpoints not monotone at index {k}")
        prev_x, prev_y = x, y


def convolve_with_ranges(A: Vector, B: Vector, R: "RangeIntervals") -> Vector:
    """(max,+)-convolve restricted to per-index candidate ranges.

    ``C[l]`` is the maximum of ``A[k] + B[l-k]`` over splits with
    ``l-k`` inside ``R.intervals[k]``.  When the ranges certify a split
    witness for every output index (the contract under which solvers call
    this), the result equals ``convolve_naive(A, B)`` exactly.  Cost is
    proportional to the total width of the ranges.
    """
    if len(A) == 0 or len(B) == 0:
        raise ValueError("empty input vector")
    intervals = list(R.intervals)
    _check_interval_structure(intervals, len(A), len(B))
    L = max(len(A), len(B))
    total = sum(y - x + 1 for iv in intervals if iv is not None for x, y in (iv,))
    if total >= SMALL_PRODUCT_CUTOFF and _numpy_ok(A, B):
        b = np.asarray(B, dtype=np.float64)
        out = np.full(L, NEG_INF)
        for k, a in enumerate(A):
            if a == NEG_INF or intervals[k] is None:
                continue
            x, y = intervals[k]
            hi = min(y, L - 1 - k)
            if hi >= x:
                np.maximum(out[k + x : k + hi + 1], a + b[x : hi + 1], out=out[k + x : k + hi + 1])
        return [_from_float(v) for v in out.tolist()]
    out_py: Vector = [NEG_INF] * L
    for k, a in enumerate(A):
        if a == NEG_INF or intervals[k] is None:
            continue
        x, y = intervals[k]
        hi = min(y, L - 1 - k)
        for j in range(x, hi + 1):
            v = a + B[j]
            if v > out_py[k + j]:
                out_py[k + j] = v
    return out_py


# ---------------------------------------------------------------------------
# bounded-monotone slot
# ---------------------------------------------------------------------------


def is_bounded_monotone(A: Vector, b) -> bool:
    """True iff A is monotone non-decreasing with every entry at most b."""
    prev = NEG_INF
    for v in A:
        if v < prev or v > b:
            return False
        prev = v
    return True


# ---------------------------------------------------------------------------
# (min,+) mirror
# ---------------------------------------------------------------------------


def _minplus_naive(A: Vector, B: Vector) -> Vector:
    """Full-length (min,+)-convolution; POS_INF entries saturate."""
    L = len(A) + len(B) - 1
    if len(A) > len(B):
        A, B = B, A
    if len(A) * len(B) >= SMALL_PRODUCT_CUTOFF and _numpy_ok(A, B):
        b = np.asarray(B, dtype=np.float64)
        out = np.full(L, POS_INF)
        for k, a in enumerate(A):
            if a == POS_INF:
                continue
            np.minimum(out[k : k + len(B)], a + b, out=out[k : k + len(B)])
        return [_from_float(v) for v in out.tolist()]
    out_py: Vector = [POS_INF] * L
    for k, a in enumerate(A):
        if a == POS_INF:
            continue
        for j, bv in enumerate(B):
            if bv == POS_INF:
                continue
            v = a + bv
            if v < out_py[k + j]:
                out_py[k + j] = v
    return out_py


def _inf_entries_form_suffix(A: Sequence) -> bool:
    seen_inf = False
    for v in A:
        if v == POS_INF:
            seen_inf = True
        elif seen_inf:
            return False
    return True


def _minplus_sstep_convex(A: Vector, B: Vector, s: int) -> Vector:
    """(min,+) counterpart of the s-step engine for convex step vectors."""
    L = len(A) + len(B) - 1
    if len(A) * len(B) <= SMALL_PRODUCT_CUTOFF or not _inf_entries_form_suffix(A):
        return _minplus_naive(A, B)

    Bc = list(B[::s])  # convex stride subsample; last index of B is a multiple of s
    last_t = len(Bc) - 1
    out: Vector = [POS_INF] * L

    # t = 0 contributes the single split j = 0.
    base = Bc[0]
    for l in range(min(len(A), L)):
        if A[l] != POS_INF:
            out[l] = A[l] + base

    if last_t > 0:
        # Steps t >= 1 pair Bc[t] with a width-s window of A starting at
        # l - t*s; windows may stick out below 0, hence the offset array.
        d_min = _window_min_starting(A, s, L)

        for r in range(min(s, L)):
            n_rows = (L - 1 - r) // s + 1

            # E(v) = window minimum at m = (v-1)*s + r, i.e. step t = q-v+1.
            def value(q: int, v: int, d_min=d_min, Bc=Bc, r=r, s=s) -> float:
                m = (v - 1) * s + r
                if m < -(s - 1):  # window entirely below index 0
                    return POS_INF
                return d_min[m + s - 1] + Bc[q - v + 1]

            def bounds(q: int, last_t=last_t) -> tuple[int, int]:
                return max(0, q - last_t + 1), q

            def neg_value(q: int, v: int, value=value) -> float:
                return -value(q, v)

            args = _monotone_argmax(n_rows, neg_value, bounds)
            for q, v in enumerate(args):
                val = value(q, v)
                l = q * s + r
                if val < out[l]:
                    out[l] = val
    return out


def minplus_convolve(A: Vector, B: Vector, engine: "ConvolutionEngine | None" = None) -> Vector:
    """(min,+)-convolve inverse vectors: C[l] = min over splits of A[k]+B[l-k].

    Output always has the full ``|A|+|B|-1`` length, since weight targets add
    across operands.  Equivalent to negating both operands (POS_INF mapping
    to NEG_INF), (max,+)-convolving at full length, and negating back.
    """
    if len(A) == 0 or len(B) == 0:
        raise ValueError("empty input vector")
    if engine is None or engine.kind is EngineKind.NAIVE:
        return _minplus_naive(A, B)
    if engine.kind is EngineKind.SSTEP_CONCAVE:
        s = engine.s
        bad = _first_sstep_convex_violation(B, s)
        if bad is not None:
            raise ValueError(
                f"right operand is not {s}-step convex: first violation at index {bad}"
            )
        return _minplus_sstep_convex(A, B, s)
    raise ValueError(f"(min,+) convolution does not support engine kind {engine.kind}")


# ---------------------------------------------------------------------------
# engine abstraction
# ---------------------------------------------------------------------------


class EngineKind(Enum):
    NAIVE = "naive"
    SSTEP_CONCAVE = "sstep-concave"
    RANGE_GUIDED = "range-guided"
    BOUNDED_MONOTONE_PLUGIN = "bounded-monotone"


@dataclass(frozen=True)
class ConvolutionEngine:
    """A (max,+)-convolution strategy plus its parameters.

    All engines are extensionally equal to the naive engine on inputs that
    satisfy their structural precondition.  Engines are stateless and safe
    to share across threads.
    """

    kind: EngineKind = EngineKind.NAIVE
    s: int | None = None
    intervals: "RangeIntervals | None" = None
    b: int | None = None
    plugin: Callable[[Vector, Vector], Vector] | None = None

    @staticmethod
    def naive() -> "ConvolutionEngine":
        return ConvolutionEngine(EngineKind.NAIVE)

    @staticmethod
    def sstep(s: int) -> "ConvolutionEngine":
        if s < 1:
            raise ValueError(f"s must be >= 1, got {s}")
        return ConvolutionEngine(EngineKind.SSTEP_CONCAVE, s=s)

    @staticmethod
    def range_guided(intervals: "RangeIntervals") -> "ConvolutionEngine":
        return ConvolutionEngine(EngineKind.RANGE_GUIDED, intervals=intervals)

    @staticmethod
    def bounded_monotone(
        b: int, plugin: Callable[[Vector, Vector], Vector] | None = None
    ) -> "ConvolutionEngine":
        return ConvolutionEngine(EngineKind.BOUNDED_MONOTONE_PLUGIN, b=b, plugin=plugin)

    def convolve(self, A: Vector, B: Vector) -> Vector:
        """(max,+)-convolve A and B with this engine."""
        if self.kind is EngineKind.NAIVE:
            return convolve_naive(A, B)
        if self.kind is EngineKind.SSTEP_CONCAVE:
            return convolve_sstep_concave(A, B, self.s)
        if self.kind is EngineKind.RANGE_GUIDED:
            return convolve_with_ranges(A, B, self.intervals)
        if self.kind is EngineKind.BOUNDED_MONOTONE_PLUGIN:
            for name, v in (("left", A), ("right", B)):
                if not is_bounded_monotone(v, self.b):
                    raise ValueError(f"{name} operand is not {self.b}-bounded monotone")
            if self.plugin is not None:
                return self.plugin(A, B)
            return convolve_naive(A, B)
        raise ValueError(f"unknown engine kind {self.kind!r}")

"""Deterministic instance generation behind a single 64-bit seed.

The generator is specified precisely enough to reimplement in any language:

* RNG: SplitMix64.  State update ``s += 0x9E3779B97F4A7C15`` (mod 2^64);
  output ``z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)``,
  all multiplications mod 2^64.
* ``randint(lo, hi)`` draws one output and reduces it modulo the span
  (the modulo bias is below 2^-32 for all spans used here).
* Draw order: first the ``d_hash`` distinct due dates, each by repeated
  ``randint(1, d_max)`` rejecting duplicates, then sorted ascending;
  then for each job index 0..n-1 in order: ``p = randint(1, p_max)``,
  ``w`` per the distribution, and for job indices >= d_hash one extra
  ``randint(0, d_hash-1)`` picking the due-date slot.  Job index i < d_hash
  takes due-date slot i, which guarantees exactly d_hash distinct due dates.

Distributions: ``uniform`` draws ``w = randint(1, w_max)``;
``subset-sum`` sets ``w = min(p, w_max)`` with no extra draw.
"""

from __future__ import annotations

from .core import Instance, Job

__all__ = ["SplitMix64", "generate_instance", "DISTRIBUTIONS"]

_MASK64 = (1 << 64) - 1

DISTRIBUTIONS = ("uniform", "subset-sum")


class SplitMix64:
    """Tiny, portable 64-bit PRNG; one draw per ``next_u64`` call."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive."""
        return lo + self.next_u64() % (hi - lo + 1)


def generate_instance(
    seed: int,
    n: int,
    d_hash: int,
    d_max: int,
    p_max: int = 10,
    w_max: int = 10,
    distribution: str = "uniform",
) -> Instance:
    """Deterministic random instance with exactly d_hash distinct due dates."""
    if n < 1 or d_max < 1 or p_max < 1 or w_max < 1:
        raise ValueError("n, d_max, p_max, w_max must all be >= 1")
    if not 1 <= d_hash <= min(n, d_max):
        raise ValueError(f"d_hash must be in [1, min(n, d_max)] = [1, {min(n, d_max)}], got {d_hash}")
    if distribution not in DISTRIBUTIONS:
        raise ValueError(f"unknown distribution {distribution!r}; choose from {DISTRIBUTIONS}")

    rng = SplitMix64(seed)
    dates: list[int] = []
    seen: set[int] = set()
    while len(dates) < d_hash:
        d = rng.randint(1, d_max)
        if d not in seen:
            seen.add(d)
            dates.append(d)
    dates.sort()

    jobs: list[Job] = []
    for i in range(n):
        p = rng.randint(1, p_max)
        if distribution == "uniform":
            w = rng.randint(1, w_max)
        else:  # subset-sum
            w = min(p, w_max)
        slot = i if i < d_hash else rng.randint(0, d_hash - 1)
        jobs.append(Job(id=i, p=p, w=w, d=dates[slot]))
    return Instance(tuple(jobs))

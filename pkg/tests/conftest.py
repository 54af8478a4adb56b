"""Shared helpers for the test suite."""

from __future__ import annotations

import pytest

from tardyjobs import SolverPolicy, generate_instance
from tardyjobs.generate import SplitMix64

ALL_POLICIES = [
    SolverPolicy.LAWLER_MOORE,
    SolverPolicy.MAXPLUS_NAIVE,
    SolverPolicy.PREDICTION,
    SolverPolicy.CONCAVE_BY_P,
    SolverPolicy.INVERSE_BY_W,
]


def random_small_instance(rng: SplitMix64, seed: int, *, n_max=12, d_max_max=30, p_max=10, w_max=10):
    """One seeded instance with parameters drawn from the given rng."""
    n = 1 + rng.next_u64() % n_max
    d_max = 1 + rng.next_u64() % d_max_max
    d_hash = 1 + rng.next_u64() % min(n, d_max)
    return generate_instance(seed=seed, n=n, d_hash=d_hash, d_max=d_max, p_max=p_max, w_max=w_max)


@pytest.fixture
def forced_structured_engines(monkeypatch):
    """Push the structured convolution engines onto their real code paths
    even for tiny inputs (normally they defer to naive below a size cutoff)."""
    import tardyjobs.maxplus as mp

    monkeypatch.setattr(mp, "SMALL_PRODUCT_CUTOFF", 0)

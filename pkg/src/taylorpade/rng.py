"""Deterministic random-stream plumbing shared by the randomized probes."""

from __future__ import annotations

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed))))


def derive_seed(base: int, *key: int) -> int:
    """Stable per-task seed derived from a base seed and an integer key."""
    ss = np.random.SeedSequence(entropy=int(base), spawn_key=tuple(int(k) for k in key))
    lo, hi = ss.generate_state(2, np.uint32)
    return (int(hi) << 32) | int(lo)

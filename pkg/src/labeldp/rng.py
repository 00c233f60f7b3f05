"""Deterministic randomness.

Every randomized operation in the package draws from a generator obtained
through :func:`stream`. The contract: identical ``(seed, key)`` pairs yield
identical draw sequences across runs and platforms, and distinct keys yield
statistically independent sequences. Concurrent tasks must each own their
own stream (generators are stateful and not shareable).
"""

from __future__ import annotations

import numpy as np

__all__ = ["stream", "child_seed"]


def stream(seed: int, *key: int) -> np.random.Generator:
    """Return a generator for the sub-stream identified by ``(seed, key)``.

    Args:
      seed: Base 64-bit seed.
      key: Optional integers naming a sub-stream (e.g. a teacher index).
        Distinct keys give independent streams under the same seed.
    """
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=key))


def child_seed(seed: int, *key: int) -> int:
    """Derive a deterministic integer seed for a child component.

    Used where a sub-component takes a plain integer seed (e.g. a nested
    training config) rather than a generator.
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=key)
    return int(ss.generate_state(1, dtype=np.uint64)[0])

"""Deterministic seeding utilities.

All randomness in the package flows through numpy's PCG64 generator.  Seeds
for per-entity streams (one maze, one trajectory, one retry attempt) are
derived from a master seed with SplitMix64, so batch items are independent
of generation order and of each other.
"""

from __future__ import annotations

import numpy as np

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(state: int, index: int) -> int:
    """Return the ``index``-th output of SplitMix64 seeded with ``state``.

    SplitMix64 advances its state by a fixed odd constant and applies a
    64-bit avalanche finalizer, so outputs for distinct indices are
    decorrelated even for adjacent seeds.
    """
    z = (state + (index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def derive_seed(master_seed: int, *path: int) -> int:
    """Derive a stream seed from a master seed and an index path.

    Each path component selects one SplitMix64 output from the previous
    stage, e.g. ``derive_seed(s, size_index, maze_index)``.  Adding new
    indices at any level never perturbs streams for existing ones.
    """
    seed = master_seed & _MASK64
    for index in path:
        seed = splitmix64(seed, index)
    return seed


def generator(master_seed: int, *path: int) -> np.random.Generator:
    """Return a PCG64 generator for the stream addressed by ``path``."""
    return np.random.Generator(np.random.PCG64(derive_seed(master_seed, *path)))

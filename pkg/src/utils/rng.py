"""
Seeded random generators
Counter-based Philox streams derived from (seed, *key); no global state
"""

from typing import Tuple

import numpy as np


def make_rng(seed: int, *key: int) -> np.random.Generator:
    """Independent stream for (seed, key); equal arguments give equal streams"""
    spawn_key: Tuple[int, ...] = tuple(int(k) for k in key)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy=int(seed), spawn_key=spawn_key)))

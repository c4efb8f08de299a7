"""Deterministic seed derivation for parallel trials.

Every ensemble derives one child seed per trial from the run's root seed
via ``numpy.random.SeedSequence((root_seed, index))``.  The mapping is a
pure function of (root seed, trial index), so trial k can be reproduced in
isolation and results are independent of execution order or worker count.
"""

from __future__ import annotations

import numpy as np


def derive_seed(root_seed: int, index: int) -> int:
    """Child seed for trial ``index`` of a run rooted at ``root_seed``."""
    return int(np.random.SeedSequence((int(root_seed), int(index))).generate_state(1)[0])


def derive_rng(root_seed: int, index: int) -> np.random.Generator:
    """Generator seeded with ``derive_seed(root_seed, index)``."""
    return np.random.default_rng(derive_seed(root_seed, index))

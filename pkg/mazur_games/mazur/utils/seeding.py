from typing import List

import numpy as np


def spawn_seeds(seed: int, count: int) -> List[int]:
    """Independent per-game seeds derived from one root seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1)[0]) for child in children]

import functools
import logging
import os
import time
from typing import Dict, List

import hydra
import numpy as np
import omegaconf
import termcolor
import tqdm

from mazur import __version__

logger = logging.getLogger(__name__)


def timeit(method):
    """Log the wall time of every call of `method` at DEBUG."""

    @functools.wraps(method)
    def timed(*args, **kw):
        ts = time.perf_counter()
        try:
            return method(*args, **kw)
        finally:
            logger.debug(f"{method.__name__} took {(time.perf_counter() - ts) * 1000:.2f} ms")

    return timed


def info_packages() -> Dict[str, str]:
    return {
        "mazur": __version__,
        "numpy": np.__version__,
        "hydra": hydra.__version__,
        "omegaconf": omegaconf.__version__,
        "tqdm": tqdm.__version__,
        "termcolor": getattr(termcolor, "__version__", "unknown"),
    }


def nice_print(details: Dict, level: int = 0) -> List:
    lines = []
    LEVEL_OFFSET = "\t"
    KEY_PADDING = 20
    for k in sorted(details):
        key = f"* {k}:" if level == 0 else f"- {k}:"
        if isinstance(details[k], dict):
            lines += [level * LEVEL_OFFSET + key]
            lines += nice_print(details[k], level + 1)
        elif isinstance(details[k], (set, list, tuple)):
            lines += [level * LEVEL_OFFSET + key]
            lines += [(level + 1) * LEVEL_OFFSET + "- " + str(v) for v in details[k]]
        else:
            template = "{:%is} {}" % KEY_PADDING
            key_val = template.format(key, details[k])
            lines += [(level * LEVEL_OFFSET) + key_val]
    return lines


def print_system_env_info() -> str:
    return os.linesep.join(nice_print({"Packages": info_packages()}))

import logging
import os
from typing import Any, Dict, Iterable, Optional

from omegaconf import DictConfig

from mazur.geometry.space import parse_space, Space
from mazur.utils.io import write_json

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def run_defaults(cfg: DictConfig) -> Dict[str, Any]:
    """Values that strategy documents leave null."""
    return {"seed": int(cfg.seed), "epsilon": str(cfg.epsilon)}


def game_space(cfg: DictConfig) -> Space:
    return parse_space(str(cfg.space))


def emit(lines: Iterable[str]) -> None:
    print(os.linesep.join(lines))


def save(cfg: DictConfig, document: Dict[str, Any], default: Optional[str] = None) -> None:
    path = cfg.out if cfg.out is not None else default
    if path is None:
        return
    write_json(document, path)
    logger.info(f"wrote {path}")

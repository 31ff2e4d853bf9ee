import logging
from typing import Any, Dict, Optional, Tuple, Union

import hydra
from omegaconf import DictConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException

from mazur.errors import MazurError, UsageError
from mazur.geometry.balls import BallKind
from mazur.geometry.space import Space, UNIT_INTERVAL
from mazur.game.strategy import Role, Strategy
from mazur.strategies.decay import DecayWrapper
from mazur.utils.config import CONF_DIR

logger = logging.getLogger(__name__)

STRATEGY_DIR = CONF_DIR / "strategy"


def parse_strategy_spec(spec: str) -> Tuple[str, Dict[str, str]]:
    """'random:seed=7,growth=extend-by-2' -> ('random', {'seed': '7', 'growth': 'extend-by-2'})."""
    name, _, params = spec.strip().partition(":")
    overrides = {}
    for item in filter(None, (p.strip() for p in params.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"strategy parameter {item!r} in {spec!r} is not key=value")
        overrides[key.strip()] = value.strip()
    return name, overrides


def strategy_config(spec: str, defaults: Optional[Dict[str, Any]] = None) -> DictConfig:
    """
    The instantiation document for a strategy string: conf/strategy/<name>.yaml with
    the string's parameters merged in. Keys left null take their value from `defaults`
    (the run seed and epsilon).
    """
    name, overrides = parse_strategy_spec(spec)
    path = STRATEGY_DIR / f"{name}.yaml"
    if not name or not path.is_file():
        known = sorted(p.stem for p in STRATEGY_DIR.glob("*.yaml"))
        raise UsageError(f"unknown strategy {name!r}; choose from {', '.join(known)}")
    cfg = OmegaConf.load(path)
    OmegaConf.set_struct(cfg, True)
    try:
        cfg = OmegaConf.merge(cfg, OmegaConf.from_dotlist([f"{k}={v}" for k, v in overrides.items()]))
    except OmegaConfBaseException as e:
        raise UsageError(f"bad parameters for strategy {name!r}: {e}") from e
    for key, value in (defaults or {}).items():
        if key in cfg and cfg[key] is None:
            cfg[key] = value
    OmegaConf.set_struct(cfg, False)
    return cfg


def build_strategy(
    spec: str,
    space: Space = UNIT_INTERVAL,
    variant: Union[BallKind, str] = BallKind.PRODUCT,
    role: Union[Role, str] = Role.PLAYER_1,
    defaults: Optional[Dict[str, Any]] = None,
) -> Strategy:
    cfg = strategy_config(spec, defaults)
    logger.debug(f"strategy {spec!r} for {Role(role).value}:\n{OmegaConf.to_yaml(cfg)}")
    try:
        return hydra.utils.instantiate(cfg, space, variant=BallKind(variant).value, role=Role(role).value)
    except MazurError:
        raise
    except Exception as e:
        # hydra wraps constructor errors; unwrap ours
        cause = e.__cause__
        while cause is not None:
            if isinstance(cause, MazurError):
                raise cause
            cause = cause.__cause__
        raise UsageError(f"cannot build strategy {spec!r}: {e}") from e


def with_decay(strategy: Strategy, decay: Optional[str]) -> Strategy:
    """Wrap `strategy` in a decay schedule of ratio `decay` ("1/2"), or leave it as is for None/"off"."""
    if decay is None or str(decay) in ("", "off", "none"):
        return strategy
    return DecayWrapper(strategy, ratio=str(decay))

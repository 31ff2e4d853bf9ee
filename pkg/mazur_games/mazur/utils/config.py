import logging
from pathlib import Path
from typing import Any, Dict, Optional

from omegaconf import DictConfig, OmegaConf
from omegaconf.errors import OmegaConfBaseException

from mazur.errors import UsageError
from mazur.utils.io import read_json

logger = logging.getLogger(__name__)

CONF_DIR = Path(__file__).parents[2] / "conf"


def load_config(config_file: Optional[str] = None, overrides: Optional[Dict[str, Any]] = None) -> DictConfig:
    """conf/config.yaml, then the JSON config file, then explicit overrides."""
    cfg = OmegaConf.load(CONF_DIR / "config.yaml")
    OmegaConf.set_struct(cfg, True)
    layers = []
    if config_file is not None:
        try:
            layers.append(OmegaConf.create(read_json(config_file)))
        except (OSError, ValueError) as e:
            raise UsageError(f"cannot read config file {config_file}: {e}") from e
    if overrides:
        layers.append(OmegaConf.create({k: v for k, v in overrides.items() if v is not None}))
    try:
        cfg = OmegaConf.merge(cfg, *layers)
    except OmegaConfBaseException as e:
        raise UsageError(f"bad configuration: {e}") from e
    logger.debug("configuration:\n" + OmegaConf.to_yaml(cfg))
    return cfg

import logging.config

from omegaconf import OmegaConf

from mazur.utils.config import CONF_DIR


def setup_logging(verbose: bool = False, color: bool = True) -> None:
    """Configure the root logger from conf/logging/colorlog.yaml."""
    cfg = OmegaConf.to_container(OmegaConf.load(CONF_DIR / "logging" / "colorlog.yaml"), resolve=True)
    if verbose:
        cfg["root"]["level"] = "DEBUG"
    if not color:
        cfg["handlers"]["console"]["formatter"] = "simple"
    logging.config.dictConfig(cfg)

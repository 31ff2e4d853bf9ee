import logging

from omegaconf import DictConfig

from mazur.commands.common import emit, EXIT_FAIL, EXIT_PASS, game_space, run_defaults, save
from mazur.geometry.balls import BallKind
from mazur.game.referee import play
from mazur.game.strategy import Role
from mazur.game.verification import transcript_document
from mazur.strategies.factory import build_strategy, with_decay
from mazur.utils.report import check_lines, outcome_line, radius_table
from mazur.utils.utils import timeit

logger = logging.getLogger(__name__)


@timeit
def cmd_play(cfg: DictConfig) -> int:
    """Referee one plain game. Illegal moves are a recorded loss, not a failure of the run."""
    space = game_space(cfg)
    variant = BallKind(str(cfg.variant))
    defaults = run_defaults(cfg)
    p1 = build_strategy(str(cfg.p1), space, variant, Role.PLAYER_1, defaults)
    p2 = with_decay(build_strategy(str(cfg.p2), space, variant, Role.PLAYER_2, defaults), cfg.decay)
    logger.info(f"{p1!r} against {p2!r}, {cfg.rounds} rounds on {space}")

    transcript = play(p1, p2, int(cfg.rounds), variant, space)
    document = transcript_document(transcript, space)
    save(cfg, document)

    emit(radius_table(transcript) + [outcome_line(transcript)] + check_lines(document["checks"], cfg.color))
    # a lost game still exits 0
    engine_checks = {name: ok for name, ok in document["checks"].items() if name != "legal"}
    return EXIT_PASS if all(engine_checks.values()) else EXIT_FAIL

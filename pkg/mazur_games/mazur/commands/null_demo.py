from fractions import Fraction
import logging

from omegaconf import DictConfig

from mazur.commands.common import emit, EXIT_FAIL, EXIT_PASS, game_space, run_defaults, save
from mazur.geometry.balls import BallKind
from mazur.geometry.space import format_scalar
from mazur.game.referee import play
from mazur.game.strategy import Role
from mazur.game.verification import transcript_document
from mazur.strategies.factory import build_strategy
from mazur.strategies.null_player import NullPlayer
from mazur.utils.report import check_lines, outcome_line, status
from mazur.utils.utils import timeit

logger = logging.getLogger(__name__)


@timeit
def cmd_null_demo(cfg: DictConfig) -> int:
    """
    Play the measure-shrinking Player II of the product game against `cfg.p1` and
    check its certificates: stage m costs at most ε·2^(-m), all stages at most ε.
    """
    space = game_space(cfg)
    p2 = NullPlayer(space, epsilon=str(cfg.epsilon))
    p1 = build_strategy(str(cfg.p1), space, BallKind.PRODUCT, Role.PLAYER_1, run_defaults(cfg))
    transcript = play(p1, p2, int(cfg.rounds), BallKind.PRODUCT, space)
    document = transcript_document(transcript, space)
    certificates = [r.certificate for r in transcript.stages if r.certificate is not None]
    total = sum((c.measure for c in certificates), Fraction(0))
    document["cumulative_measure"] = format_scalar(total)
    save(cfg, document)

    lines = [f"{'stage':>5}  {'radius':>16}  {'measure':>16}  {'bound':>12}"]
    for c in certificates:
        lines.append(
            f"{c.stage:>5}  {format_scalar(c.radius):>16}  {format_scalar(c.measure):>16}  {format_scalar(c.bound):>12}"
        )
    ok = transcript.complete and total <= p2.epsilon and all(c.holds for c in certificates)
    lines.append(f"cumulative measure {format_scalar(total)} <= {format_scalar(p2.epsilon)}  {status(ok, cfg.color)}")
    emit(lines + [outcome_line(transcript)] + check_lines(document["checks"], cfg.color))
    return EXIT_PASS if ok and all(document["checks"].values()) else EXIT_FAIL

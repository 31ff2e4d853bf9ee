import logging
from typing import Callable, List, Optional, Union

from mazur.errors import GameAborted, StrategyFailure, UsageError
from mazur.geometry.balls import Ball, BallKind, nesting_diagnostic, validate
from mazur.geometry.space import Space, UNIT_INTERVAL
from mazur.game.strategy import Role, Strategy
from mazur.game.transcript import Outcome, Transcript
from mazur.transfer.stage import Direction, StageRecord

logger = logging.getLogger(__name__)


def judge(ball, previous: Optional[Ball], variant: BallKind, space: Space = UNIT_INTERVAL) -> Optional[str]:
    """Reason why `ball` is not a legal answer to `previous`, or None when it is."""
    if not isinstance(ball, Ball):
        return f"expected a ball, got {type(ball).__name__}"
    if ball.kind is not variant:
        return f"a {ball.kind.value} ball was played in the {variant.value} game"
    report = validate(ball, space)
    if not report.valid:
        return f"invalid ball: {report}"
    if previous is not None:
        return nesting_diagnostic(ball, previous, space)
    return None


def play(
    p1: Strategy,
    p2: Strategy,
    rounds: int,
    variant: Union[BallKind, str, None] = None,
    space: Space = UNIT_INTERVAL,
    direction: Optional[Direction] = None,
    on_stage: Optional[Callable[[StageRecord], None]] = None,
) -> Transcript:
    """
    Referee one game of `rounds` stages. Illegal moves, strategy failures and aborts
    end the game with the offending player recorded; they never raise. `on_stage`
    sees every finished stage record.
    """
    if rounds < 1:
        raise UsageError(f"rounds must be positive, got {rounds}")
    variant = p1.variant if variant is None else BallKind(variant)
    for role, player in ((Role.PLAYER_1, p1), (Role.PLAYER_2, p2)):
        if player.variant is not variant:
            raise UsageError(f"{player!r} cannot play {role.value} in the {variant.value} game")

    p1.reset()
    p2.reset()
    transcript = Transcript(variant, rounds, direction=direction)
    history: List[Ball] = []
    for m in range(1, rounds + 1):
        for role, player in ((Role.PLAYER_1, p1), (Role.PLAYER_2, p2)):
            previous = history[-1] if history else None
            try:
                ball = player.move(tuple(history), previous)
            except StrategyFailure as e:
                logger.warning(f"stage {m}: {role.value} failed: {e}")
                return _ended(transcript, Outcome.STRATEGY_FAILURE, role, str(e), m)
            except GameAborted as e:
                logger.info(f"stage {m}: {role.value} aborted the game")
                return _ended(transcript, Outcome.ABORTED, role, str(e) or "aborted", m)
            reason = judge(ball, previous, variant, space)
            if reason is not None:
                logger.warning(f"stage {m}: {role.value} played an illegal move: {reason}")
                return _ended(transcript, Outcome.ILLEGAL_MOVE, role, reason, m, ball)
            history.append(ball)
        record = StageRecord(stage=m, player1=history[-2], player2=history[-1])
        transcript.stages.append(p2.annotate(p1.annotate(record)))
        if on_stage is not None:
            on_stage(transcript.stages[-1])
        logger.debug(f"stage {m}: {history[-2]} / {history[-1]}")
    return transcript


def _ended(
    transcript: Transcript, outcome: Outcome, role: Role, reason: str, stage: int, ball: Optional[Ball] = None
) -> Transcript:
    transcript.outcome = outcome
    transcript.offender = role
    transcript.reason = reason
    transcript.failed_stage = stage
    transcript.offending_move = ball if isinstance(ball, Ball) else None
    return transcript

from fractions import Fraction
import logging
from typing import Optional, Sequence, Union

from mazur.errors import StrategyFailure, UsageError
from mazur.geometry.balls import Ball, BallKind, parse_ball
from mazur.geometry.space import Space, to_scalar, UNIT_INTERVAL
from mazur.game.strategy import Role, stage_of, Strategy

logger = logging.getLogger(__name__)


class ShrinkPlayer(Strategy):
    """Replays the opponent's ball with its radius scaled by `factor`."""

    def __init__(
        self,
        space: Space = UNIT_INTERVAL,
        variant: Union[BallKind, str] = BallKind.PRODUCT,
        role: Union[Role, str] = Role.PLAYER_2,
        factor: Union[str, int, Fraction] = "1/2",
    ):
        super().__init__(variant, role)
        self.factor = to_scalar(factor)
        if not 0 < self.factor <= 1:
            raise UsageError(f"shrink factor must lie in (0,1], got {factor}")

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        if opponent_move is None:
            raise StrategyFailure("shrink can only answer a move")
        return opponent_move.with_radius(opponent_move.radius * self.factor)


class ScriptedPlayer(Strategy):
    """
    Plays a fixed list of ball literals, one per stage. Once the script runs out it
    answers by halving the opponent's radius, or fails when there is nothing to answer.
    """

    def __init__(
        self,
        space: Space = UNIT_INTERVAL,
        moves: Sequence[Union[str, Ball]] = (),
        variant: Union[BallKind, str] = BallKind.PRODUCT,
        role: Union[Role, str] = Role.PLAYER_1,
    ):
        super().__init__(variant, role)
        self.moves = [m if isinstance(m, Ball) else parse_ball(m, self.variant) for m in moves]

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        m = stage_of(history)
        if m <= len(self.moves):
            return self.moves[m - 1]
        if opponent_move is None:
            raise StrategyFailure(f"script exhausted after {len(self.moves)} moves")
        return opponent_move.with_radius(opponent_move.radius / 2)

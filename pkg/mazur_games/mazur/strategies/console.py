import logging
from typing import Callable, Optional, Sequence, Union

from mazur.errors import GameAborted, UsageError
from mazur.geometry.balls import Ball, BallKind, parse_ball
from mazur.geometry.space import Space, UNIT_INTERVAL
from mazur.game.referee import judge
from mazur.game.strategy import Role, stage_of, Strategy

logger = logging.getLogger(__name__)

QUIT_WORDS = ("quit", "exit", "q")


class ConsoleStrategy(Strategy):
    """
    A human at the terminal. Moves are typed as ball literals, e.g. ``[{0},{1/2}] 2 1/10``,
    or as ball JSON documents. Malformed or illegal moves are refused with the reason
    and the prompt repeats; ``quit`` (or end of input) aborts the game.
    """

    def __init__(
        self,
        space: Space = UNIT_INTERVAL,
        variant: Union[BallKind, str] = BallKind.PRODUCT,
        role: Union[Role, str] = Role.PLAYER_1,
        input_fn: Callable[[str], str] = input,
        output_fn: Callable[[str], None] = print,
    ):
        super().__init__(variant, role)
        self.space = space
        self.input_fn = input_fn
        self.output_fn = output_fn

    def _read(self, prompt: str) -> str:
        try:
            line = self.input_fn(prompt)
        except EOFError:
            raise GameAborted("end of input")
        if line.strip().lower() in QUIT_WORDS:
            raise GameAborted("quit")
        return line

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        m = stage_of(history)
        if opponent_move is not None:
            self.output_fn(f"opponent: {opponent_move}")
        while True:
            line = self._read(f"stage {m} ({self.variant.value}) > ")
            try:
                ball = parse_ball(line, self.variant)
            except UsageError as e:
                self.output_fn(f"rejected: {e}")
                continue
            reason = judge(ball, opponent_move, self.variant, self.space)
            if reason is None:
                return ball
            logger.debug(f"refused {ball}: {reason}")
            self.output_fn(f"rejected: {reason}")

from abc import ABC, abstractmethod
from enum import Enum
import logging
from typing import Optional, Sequence, Union

from mazur.geometry.balls import Ball, BallKind
from mazur.transfer.stage import StageRecord

logger = logging.getLogger(__name__)


class Role(str, Enum):
    PLAYER_1 = "player1"
    PLAYER_2 = "player2"


def stage_of(history: Sequence[Ball]) -> int:
    """1-based stage a player is moving in, given every move played so far."""
    return len(history) // 2 + 1


class Strategy(ABC):
    """
    A decision rule for one player of one game variant. Strategies are untrusted:
    the referee judges every move they return.
    """

    def __init__(self, variant: Union[BallKind, str], role: Union[Role, str]):
        self.variant = BallKind(variant)
        self.role = Role(role)

    @property
    def name(self) -> str:
        return type(self).__name__

    def reset(self) -> None:
        """
        This is called before every game.
        """

    @abstractmethod
    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        """
        Args:
            history: every move of the game so far, both players, oldest first
            opponent_move: the move to answer (None for Player I's first move)
        Returns:
            the next ball, which must be legally nested in `opponent_move`
        """
        raise NotImplementedError

    def annotate(self, record: StageRecord) -> StageRecord:
        """Attach strategy-side bookkeeping (shadows, certificates) to a finished stage."""
        return record

    def __repr__(self):
        return f"{self.name}({self.variant.value}, {self.role.value})"

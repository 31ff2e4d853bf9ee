from dataclasses import dataclass, field
from enum import Enum
import logging
from typing import Any, Dict, List, Optional

from mazur.geometry.balls import Ball, BallKind
from mazur.game.strategy import Role
from mazur.transfer.stage import Direction, StageRecord

logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    COMPLETE = "complete"
    ILLEGAL_MOVE = "illegal-move"
    STRATEGY_FAILURE = "strategy-failure"
    ABORTED = "aborted"


@dataclass
class Transcript:
    """The legal stages of one game plus how it ended. Only complete stages are kept."""

    variant: BallKind
    rounds: int
    stages: List[StageRecord] = field(default_factory=list)
    outcome: Outcome = Outcome.COMPLETE
    offender: Optional[Role] = None
    reason: Optional[str] = None
    failed_stage: Optional[int] = None
    offending_move: Optional[Ball] = None
    direction: Optional[Direction] = None

    @property
    def complete(self) -> bool:
        return self.outcome is Outcome.COMPLETE

    @property
    def loser(self) -> Optional[Role]:
        """The player charged with the loss when the game ended early."""
        return None if self.complete else self.offender

    @property
    def composed(self) -> bool:
        return self.direction is not None

    @property
    def moves(self) -> List[Ball]:
        return [ball for record in self.stages for ball in (record.player1, record.player2)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variant": self.variant.value,
            "direction": None if self.direction is None else self.direction.value,
            "rounds": self.rounds,
            "outcome": self.outcome.value,
            "offender": None if self.offender is None else self.offender.value,
            "reason": self.reason,
            "failed_stage": self.failed_stage,
            "offending_move": None if self.offending_move is None else self.offending_move.to_dict(),
            "stages": [record.to_dict() for record in self.stages],
        }

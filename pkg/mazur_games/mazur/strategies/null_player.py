from dataclasses import dataclass, replace
from fractions import Fraction
import logging
from typing import Dict, Optional, Sequence, Union

from mazur.errors import StrategyFailure, UsageError
from mazur.geometry.balls import Ball, BallKind
from mazur.geometry.hyperspace import FiniteCompact, interval_measure, is_interval_space
from mazur.geometry.space import format_scalar, Space, to_scalar, UNIT_INTERVAL
from mazur.game.strategy import Role, stage_of, Strategy
from mazur.transfer.stage import StageRecord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NullCertificate:
    """Exact measure of the dilated centres of one reply, against the stage budget ε·2^(-m)."""

    stage: int
    centres: FiniteCompact
    radius: Fraction
    measure: Fraction
    epsilon: Fraction

    @property
    def bound(self) -> Fraction:
        return self.epsilon / 2 ** self.stage

    @property
    def holds(self) -> bool:
        return self.measure == interval_measure(self.centres, self.radius) and self.measure <= self.bound

    def to_dict(self) -> Dict:
        return {
            "stage": self.stage,
            "centres": self.centres.to_list(),
            "radius": format_scalar(self.radius),
            "measure": format_scalar(self.measure),
            "bound": format_scalar(self.bound),
            "epsilon": format_scalar(self.epsilon),
        }


class NullPlayer(Strategy):
    """
    Player II of the product game on the unit interval that keeps Player I's centres
    and shrinks the radius until the dilated union has measure at most ε·2^(-m).
    Summed over all stages the certified measures stay below ε.
    """

    def __init__(
        self,
        space: Space = UNIT_INTERVAL,
        epsilon: Union[str, int, Fraction] = "1/100",
        variant: Union[BallKind, str] = BallKind.PRODUCT,
        role: Union[Role, str] = Role.PLAYER_2,
    ):
        super().__init__(variant, role)
        if not is_interval_space(space):
            raise UsageError("the null strategy measures dilations in the unit interval only")
        self.space = space
        self.epsilon = to_scalar(epsilon)
        if not 0 < self.epsilon <= 1:
            raise UsageError(f"epsilon must lie in (0,1], got {format_scalar(self.epsilon)}")
        self.certificates: Dict[int, NullCertificate] = {}

    def reset(self) -> None:
        self.certificates = {}

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        if opponent_move is None:
            raise StrategyFailure("the null strategy only answers moves")
        m = stage_of(history)
        centres = opponent_move.union()
        budget = self.epsilon / 2 ** m
        radius = opponent_move.radius / 2
        if centres:
            # each centre contributes at most 2r
            radius = min(radius, budget / (2 * len(centres)))
        measure = interval_measure(centres, radius)
        self.certificates[m] = NullCertificate(m, centres, radius, measure, self.epsilon)
        logger.debug(f"stage {m}: radius {format_scalar(radius)}, measure {format_scalar(measure)}")
        return opponent_move.with_radius(radius)

    def annotate(self, record: StageRecord) -> StageRecord:
        certificate = self.certificates.get(record.stage)
        if certificate is None:
            return record
        return replace(record, certificate=certificate)


def null_player2(epsilon: Union[str, Fraction] = "1/100", space: Space = UNIT_INTERVAL) -> NullPlayer:
    return NullPlayer(space, epsilon=epsilon)

from dataclasses import dataclass, replace
from fractions import Fraction
import logging
from typing import Dict, Optional, Sequence, Union

from mazur.errors import UsageError
from mazur.geometry.balls import Ball
from mazur.geometry.space import format_scalar, to_scalar
from mazur.game.strategy import stage_of, Strategy
from mazur.transfer.stage import StageRecord

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecayBound:
    stage: int
    bound: Fraction
    radius: Fraction

    @property
    def holds(self) -> bool:
        return self.radius <= self.bound

    def to_dict(self) -> Dict:
        return {"stage": self.stage, "bound": format_scalar(self.bound), "radius": format_scalar(self.radius)}


class DecayWrapper(Strategy):
    """
    Plays the inner strategy's move with its radius cut to the schedule value of
    the stage. Shrinking the radius of a legal move keeps it legal, so the wrapper
    never changes who wins; it only forces the radii to zero.

    The schedule is either an explicit strictly decreasing list, one value per
    stage, or `ratio ** m`.
    """

    def __init__(
        self,
        inner: Strategy,
        ratio: Union[str, Fraction] = "1/2",
        schedule: Optional[Sequence[Union[str, Fraction]]] = None,
    ):
        super().__init__(inner.variant, inner.role)
        self.inner = inner
        self.ratio = to_scalar(ratio)
        if not 0 < self.ratio < 1:
            raise UsageError(f"decay ratio must lie in (0,1), got {format_scalar(self.ratio)}")
        self.schedule = None if schedule is None else [to_scalar(v) for v in schedule]
        if self.schedule is not None:
            if any(v <= 0 for v in self.schedule) or any(a <= b for a, b in zip(self.schedule, self.schedule[1:])):
                raise UsageError("a decay schedule must be positive and strictly decreasing")
        self.bounds: Dict[int, DecayBound] = {}

    @property
    def name(self) -> str:
        return f"Decay[{self.inner.name}]"

    def bound(self, m: int) -> Fraction:
        if self.schedule is None:
            return self.ratio ** m
        if m > len(self.schedule):
            # past the explicit schedule keep shrinking at the default ratio
            return self.schedule[-1] * self.ratio ** (m - len(self.schedule))
        return self.schedule[m - 1]

    def reset(self) -> None:
        self.inner.reset()
        self.bounds = {}

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        m = stage_of(history)
        ball = self.inner.move(history, opponent_move)
        bound = self.bound(m)
        if ball.radius > bound:
            logger.debug(f"stage {m}: radius {format_scalar(ball.radius)} cut to {format_scalar(bound)}")
            ball = ball.with_radius(bound)
        self.bounds[m] = DecayBound(m, bound, ball.radius)
        return ball

    def annotate(self, record: StageRecord) -> StageRecord:
        record = self.inner.annotate(record)
        if record.stage not in self.bounds:
            return record
        return replace(record, decay=self.bounds[record.stage])


def decay_wrapper(inner: Strategy, schedule: Optional[Sequence[Union[str, Fraction]]] = None) -> DecayWrapper:
    return DecayWrapper(inner, schedule=schedule)

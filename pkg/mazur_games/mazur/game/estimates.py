from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Dict, List, Tuple

from mazur.errors import UsageError
from mazur.geometry.balls import Ball
from mazur.geometry.hyperspace import FiniteCompact, hausdorff, union_all
from mazur.geometry.space import format_scalar, Space, UNIT_INTERVAL
from mazur.game.transcript import Transcript

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LimitEstimate:
    """
    Finite-stage approximation of the limit sequence: centre n is within errors[n-1]
    of the limit's n-th set. frozen[n-1] is the stage whose ball first fixed index n.
    """

    stage: int
    centres: Tuple[FiniteCompact, ...]
    errors: Tuple[Fraction, ...]
    frozen: Tuple[int, ...]

    def estimate(self, n: int) -> FiniteCompact:
        return self.centres[n - 1]

    def error(self, n: int) -> Fraction:
        return self.errors[n - 1]

    def frozen_at(self, n: int) -> int:
        return self.frozen[n - 1]

    def to_dict(self) -> Dict:
        return {
            "stage": self.stage,
            "estimates": [k.to_list() for k in self.centres],
            "errors": [format_scalar(e) for e in self.errors],
            "frozen": list(self.frozen),
        }


def _estimated_balls(t: Transcript, shadow: bool) -> List[Ball]:
    if shadow:
        if not t.composed:
            raise UsageError("only composed transcripts have a shadow game")
        return [record.l_ball for record in t.stages]
    if t.composed:
        return [record.k_ball for record in t.stages]
    return [record.player2 for record in t.stages]


def limit_estimate(t: Transcript, shadow: bool = False) -> LimitEstimate:
    """
    Estimate from the final stage. Composed transcripts estimate the product limit
    from the K-balls, or the increasing limit from the L-balls when `shadow` is set;
    plain games use Player II's moves. Each index n is covered from the stage that
    froze it on, and its error is the radius of the final ball.
    """
    if not t.stages:
        raise UsageError("cannot estimate the limit of an empty transcript")
    balls = _estimated_balls(t, shadow)
    final = balls[-1]
    frozen = tuple(
        next(m for m, ball in enumerate(balls, start=1) if ball.index >= n) for n in range(1, final.index + 1)
    )
    return LimitEstimate(t.stages[-1].stage, final.prefix, (final.radius,) * final.index, frozen)


def union_agreement(t: Transcript, space: Space = UNIT_INTERVAL) -> Fraction:
    """Largest distance over all stages between ⋃Kₙ and the last set of K̃."""
    return max(
        (hausdorff(space, r.k_ball.union(), r.k_tilde.center(r.k_tilde.index)) for r in t.stages if r.composed),
        default=Fraction(0),
    )


def prefix_containment(t: Transcript) -> bool:
    for record in t.stages:
        if not record.composed:
            continue
        k, kt = record.k_ball, record.k_tilde
        for n in range(1, k.index + 1):
            if n > kt.index or not union_all(k.prefix[:n]) <= kt.center(n):
                logger.warning(f"stage {record.stage}: K_1..K_{n} not contained in K~_{n}")
                return False
    return True


def limit_stability(t: Transcript, space: Space = UNIT_INTERVAL) -> bool:
    """
    Every centre set stays within the radius of the move that froze it, in all later moves.
    Checked between consecutive moves as d(later, earlier) + later radius ≤ earlier radius,
    which chains by the triangle inequality across any number of moves.
    """
    moves = t.moves
    for earlier, later in zip(moves, moves[1:]):
        if later.index < earlier.index:
            return False
        for n in range(1, earlier.index + 1):
            if hausdorff(space, later.center(n), earlier.center(n)) + later.radius > earlier.radius:
                logger.warning(f"centre {n} of {later} left the ball {earlier}")
                return False
    return True

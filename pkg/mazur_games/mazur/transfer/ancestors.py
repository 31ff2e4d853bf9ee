from fractions import Fraction
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from mazur.errors import BrokenChainError, UsageError
from mazur.geometry.space import distance, format_scalar, Space, UNIT_INTERVAL
from mazur.transfer.stage import Direction, StageRecord
from mazur.transfer.transfer import ParentMap

logger = logging.getLogger(__name__)


def _stage(stages: Sequence[StageRecord], m: int) -> StageRecord:
    if not 1 <= m <= len(stages):
        raise UsageError(f"stage {m} is outside the transcript (1..{len(stages)})")
    return stages[m - 1]


def _hops(stages: Sequence[StageRecord], m: int) -> List[Optional[ParentMap]]:
    """Parent maps leading from the product points of stage m to those of stage m - 1."""
    record = _stage(stages, m)
    if record.direction is Direction.PRODUCT:
        # K(m) -> L(m-1) -> K~(m-1)
        return [record.forward_parents, _stage(stages, m - 1).reverse_parents]
    if record.direction is Direction.INCREASING:
        # K(m) -> L(m) -> K~(m-1)
        return [record.forward_parents, record.reverse_parents]
    raise BrokenChainError(f"stage {m} carries no transfer bookkeeping")


def _step_back(stages: Sequence[StageRecord], point: Fraction, m: int) -> List[Fraction]:
    """The points visited going from a point of the product move at stage m back to stage m - 1."""
    visited = []
    for parents in _hops(stages, m):
        if parents is None:
            raise BrokenChainError(f"stage {m} has no parent map")
        current = visited[-1] if visited else point
        if current not in parents:
            raise BrokenChainError(f"{format_scalar(current)} has no parent at stage {m}")
        visited.append(parents[current])
    return visited


def ancestor_chain(transcript, point: Fraction, from_stage: int, to_stage: int) -> List[Fraction]:
    """
    Follow parents from a point of the product move at `from_stage` back to `to_stage`.
    The chain lists every intermediate point, increasing-side parents included.
    """
    stages = transcript.stages
    if to_stage > from_stage:
        raise UsageError(f"cannot walk forward from stage {from_stage} to {to_stage}")
    _stage(stages, to_stage)
    if point not in _stage(stages, from_stage).k_ball.union():
        raise UsageError(f"{format_scalar(point)} is not a point of the product move at stage {from_stage}")

    chain = [point]
    for m in range(from_stage, to_stage, -1):
        chain.extend(_step_back(stages, chain[-1], m))
    logger.debug(f"chain of {format_scalar(point)}: {' <- '.join(map(format_scalar, chain))}")
    return chain


class AncestorIndex:
    """
    Memoised chain ends over one transcript: chains passing through the same point
    at the same stage share the rest of their walk.
    """

    def __init__(self, transcript):
        self.stages = transcript.stages
        self._ends: Dict[Tuple[int, int, Fraction], Fraction] = {}

    def ancestor(self, point: Fraction, from_stage: int, to_stage: int) -> Fraction:
        """The last point of `ancestor_chain(point, from_stage, to_stage)`."""
        if from_stage == to_stage:
            return point
        key = (from_stage, to_stage, point)
        if key not in self._ends:
            parent = _step_back(self.stages, point, from_stage)[-1]
            self._ends[key] = self.ancestor(parent, from_stage - 1, to_stage)
        return self._ends[key]


def chain_bound(transcript, to_stage: int) -> Fraction:
    """Strict upper bound on the displacement of any chain ending at `to_stage`."""
    return 2 * _stage(transcript.stages, to_stage).k_tilde.radius


def chain_within_bound(transcript, chain: Sequence[Fraction], to_stage: int, space: Space = UNIT_INTERVAL) -> bool:
    return distance(space, chain[0], chain[-1]) < chain_bound(transcript, to_stage)

from dataclasses import dataclass, field
from enum import Enum
import logging
from typing import Any, Dict, Optional, Tuple

from mazur.errors import TransferError, UsageError
from mazur.geometry.balls import Ball, IncreasingBall, legal_nesting, ProductBall, validate
from mazur.geometry.hyperspace import hausdorff, union_all
from mazur.geometry.space import format_scalar, Space, UNIT_INTERVAL
from mazur.transfer.transfer import (
    AffiliationTable,
    forward_claim,
    increasing_affiliations,
    ParentMap,
    product_affiliations,
    reverse_claim,
)

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    """Which game the composed Player II plays: the product game or the increasing game."""

    PRODUCT = "product"
    INCREASING = "increasing"


_DIRECTION_ALIASES = {"fig1": Direction.PRODUCT, "fig2": Direction.INCREASING}


def parse_direction(name: str) -> Direction:
    if name in _DIRECTION_ALIASES:
        return _DIRECTION_ALIASES[name]
    try:
        return Direction(name)
    except ValueError:
        raise UsageError(f"unknown direction {name!r}; use product or increasing")


@dataclass(frozen=True)
class StageRecord:
    """
    One stage of a game. Plain games fill only the two moves; composed games also
    carry the two shadow moves of the other game, the bookkeeping of both transfers
    and the named stage checks.
    """

    stage: int
    player1: Ball
    player2: Ball
    direction: Optional[Direction] = None
    shadow1: Optional[Ball] = None
    shadow2: Optional[Ball] = None
    k_affiliations: AffiliationTable = field(default_factory=dict)
    l_affiliations: AffiliationTable = field(default_factory=dict)
    forward_parents: Optional[ParentMap] = None
    reverse_parents: Optional[ParentMap] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    certificate: Optional[Any] = None
    decay: Optional[Any] = None

    def _quartet(self) -> Tuple[ProductBall, IncreasingBall, IncreasingBall, ProductBall]:
        if self.direction is Direction.PRODUCT:
            return self.player1, self.shadow1, self.shadow2, self.player2
        if self.direction is Direction.INCREASING:
            return self.shadow2, self.player2, self.player1, self.shadow1
        raise TransferError(f"stage {self.stage} is not a composed stage")

    @property
    def composed(self) -> bool:
        return self.direction is not None

    @property
    def k_ball(self) -> ProductBall:
        return self._quartet()[0]

    @property
    def k_tilde(self) -> IncreasingBall:
        return self._quartet()[1]

    @property
    def l_ball(self) -> IncreasingBall:
        return self._quartet()[2]

    @property
    def l_tilde(self) -> ProductBall:
        return self._quartet()[3]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> Dict:
        data: Dict[str, Any] = {
            "stage": self.stage,
            "player1": self.player1.to_dict(),
            "player2": self.player2.to_dict(),
        }
        if self.composed:
            data["direction"] = self.direction.value
            data["shadow1"] = self.shadow1.to_dict()
            data["shadow2"] = self.shadow2.to_dict()
            data["affiliations"] = {
                "k": {format_scalar(x): a.to_list() for x, a in sorted(self.k_affiliations.items())},
                "l": {format_scalar(x): a.to_list() for x, a in sorted(self.l_affiliations.items())},
            }
            data["parents"] = {
                name: None if pm is None else pm.to_dict()
                for name, pm in (("forward", self.forward_parents), ("reverse", self.reverse_parents))
            }
        if self.checks:
            data["checks"] = dict(self.checks)
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        if self.decay is not None:
            data["decay"] = self.decay.to_dict()
        return data


def check_star(record: StageRecord) -> Dict[str, bool]:
    """Evaluate the three stage conditions linking K to K̃ and L to L̃."""
    k, kt, l, lt = record.k_ball, record.k_tilde, record.l_ball, record.l_tilde
    star_1 = kt.index >= k.index and lt.index >= l.index and kt.radius <= k.radius / 2 and lt.radius <= l.radius / 2
    star_2 = all(
        n <= kt.index and union_all(k.prefix[:n]) <= kt.center(n) for n in range(1, k.index + 1)
    ) and all(n <= l.index and union_all(lt.prefix[:n]) <= l.center(n) for n in range(1, l.index + 1))
    star_3 = k.union() == kt.center(kt.index) and lt.union() == l.center(l.index)
    return {"star_1": star_1, "star_2": star_2, "star_3": star_3}


def forward_context(
    record: StageRecord, previous: Optional[StageRecord]
) -> Optional[Tuple[IncreasingBall, ProductBall]]:
    """The (L, L̃) pair the forward transfer of this stage answered, None on a first move."""
    if record.direction is Direction.INCREASING:
        return record.l_ball, record.l_tilde
    if previous is None:
        return None
    return previous.l_ball, previous.l_tilde


def reverse_context(
    record: StageRecord, previous: Optional[StageRecord]
) -> Optional[Tuple[ProductBall, IncreasingBall]]:
    """The (K, K̃) pair the reverse transfer of this stage answered, None on a first move."""
    if record.direction is Direction.PRODUCT:
        return record.k_ball, record.k_tilde
    if previous is None:
        return None
    return previous.k_ball, previous.k_tilde


def _affiliations_ordered(record: StageRecord) -> bool:
    try:
        tables = (
            product_affiliations(record.k_ball, record.k_tilde),
            increasing_affiliations(record.l_tilde, record.l_ball),
        )
    except TransferError:
        return False
    return all(a.first >= a.second for table in tables for a in table.values())


def stage_checks(
    record: StageRecord, previous: Optional[StageRecord] = None, space: Space = UNIT_INTERVAL
) -> Dict[str, bool]:
    k, kt, l, lt = record.k_ball, record.k_tilde, record.l_ball, record.l_tilde
    checks = {"valid": all(validate(ball, space).valid for ball in (k, kt, l, lt))}
    checks.update(check_star(record))

    forward = forward_context(record, previous)
    reverse = reverse_context(record, previous)
    checks["claim_forward"] = forward is None or forward_claim(kt, *forward, space=space)
    checks["claim_reverse"] = reverse is None or reverse_claim(lt, *reverse, space=space)
    checks["affiliation"] = _affiliations_ordered(record)

    buckets = lt.prefix
    checks["partition"] = union_all(buckets) == l.center(l.index) and sum(map(len, buckets)) == len(union_all(buckets))
    checks["union_agreement"] = hausdorff(space, k.union(), kt.center(kt.index)) == 0
    checks["prefix_containment"] = all(
        n <= kt.index and union_all(k.prefix[:n]) <= kt.center(n) for n in range(1, k.index + 1)
    )
    checks["first_coordinate"] = k.center(1) == kt.center(1)
    checks["increasing"] = all(kt.center(n - 1) <= kt.center(n) for n in range(2, kt.index + 1))
    checks["nested_forward"] = forward is None or legal_nesting(kt, forward[0], space)
    checks["nested_reverse"] = reverse is None or legal_nesting(lt, reverse[0], space)

    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning(f"stage {record.stage}: failed checks {', '.join(failed)}")
    return checks

import logging
from typing import Dict, Optional

from mazur.errors import BrokenChainError
from mazur.geometry.space import format_scalar, Space, UNIT_INTERVAL
from mazur.game.estimates import limit_estimate, limit_stability, prefix_containment, union_agreement
from mazur.game.transcript import Transcript
from mazur.transfer.ancestors import AncestorIndex, chain_within_bound
from mazur.transfer.stage import StageRecord

logger = logging.getLogger(__name__)


def radii_decreasing(t: Transcript) -> bool:
    radii = [ball.radius for ball in t.moves]
    return all(a > b for a, b in zip(radii, radii[1:]))


def radius_contraction(t: Transcript) -> bool:
    """r(m+1) ≤ r(m)/4 and s(m+1) ≤ s(m)/4 stage over stage."""
    for before, after in zip(t.stages, t.stages[1:]):
        if after.k_ball.radius > before.k_ball.radius / 4 or after.l_ball.radius > before.l_ball.radius / 4:
            logger.warning(f"stage {after.stage}: radii contracted by less than 1/4")
            return False
    return True


def first_coordinate(t: Transcript) -> bool:
    return all(r.k_ball.center(1) == r.k_tilde.center(1) for r in t.stages)


def ancestor_bound(t: Transcript, space: Space = UNIT_INTERVAL) -> bool:
    """Chains from every later stage back to every earlier one stay within twice the earlier r̃."""
    ancestors = AncestorIndex(t)
    for m0, earlier in enumerate(t.stages[:-1], start=1):
        index, origins = earlier.k_tilde.index, earlier.k_ball.union()
        for m in range(m0 + 1, len(t.stages) + 1):
            for point in t.stages[m - 1].k_tilde.center(index):
                try:
                    end = ancestors.ancestor(point, m, m0)
                except BrokenChainError as e:
                    logger.warning(f"broken chain from stage {m} to {m0}: {e}")
                    return False
                if not chain_within_bound(t, (point, end), m0, space) or end not in origins:
                    logger.warning(f"chain of {format_scalar(point)} from stage {m} to {m0} is out of bounds")
                    return False
    return True


def certificates(t: Transcript) -> bool:
    issued = [r.certificate for r in t.stages if r.certificate is not None]
    if not issued:
        return True
    return all(c.holds for c in issued) and sum(c.measure for c in issued) <= issued[0].epsilon


def decay(t: Transcript) -> bool:
    return all(r.decay.holds for r in t.stages if r.decay is not None)


def verify_transcript(t: Transcript, space: Space = UNIT_INTERVAL) -> Dict[str, bool]:
    checks = {
        "legal": t.complete,
        "radii_decreasing": radii_decreasing(t),
        "limit_stability": limit_stability(t, space),
    }
    if t.composed:
        checks["radius_contraction"] = radius_contraction(t)
        checks["stages"] = all(r.passed for r in t.stages)
        checks["union_agreement"] = union_agreement(t, space) == 0
        checks["prefix_containment"] = prefix_containment(t)
        checks["first_coordinate"] = first_coordinate(t)
        checks["ancestor_bound"] = ancestor_bound(t, space)
    if any(r.certificate is not None for r in t.stages):
        checks["certificates"] = certificates(t)
    if any(r.decay is not None for r in t.stages):
        checks["decay"] = decay(t)
    return checks


def failing_stage(t: Transcript) -> Optional[StageRecord]:
    return next((r for r in t.stages if not r.passed), None)


def transcript_document(t: Transcript, space: Space = UNIT_INTERVAL) -> Dict:
    document = t.to_dict()
    document["limit"] = limit_estimate(t).to_dict() if t.stages else None
    if t.composed and t.stages:
        document["shadow_limit"] = limit_estimate(t, shadow=True).to_dict()
    document["checks"] = verify_transcript(t, space)
    return document

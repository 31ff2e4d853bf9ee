"""Fixed regression probes replayed before seeded transfer games."""

import logging
from typing import Dict

from mazur.errors import TransferError
from mazur.geometry.balls import BallKind, parse_ball
from mazur.geometry.space import UNIT_INTERVAL
from mazur.game.composed import compose_for_product_game, play_composed
from mazur.game.strategy import Role
from mazur.strategies.basic import ScriptedPlayer
from mazur.transfer.faults import Faults, NO_FAULTS
from mazur.transfer.transfer import forward_transfer

logger = logging.getLogger(__name__)

WORKED_K = ("[{0},{1/2}] 2 1/10", "[{0},{1/2},{1/30},{3/4}] 4 1/2000")
WORKED_L = "[{0},{0,1/30,1/2}] 2 1/200"

# stage -> (K̃, L̃) of the hand-worked chain; stage 2 L̃ depends on the shrink reply and is not pinned
WORKED_SHADOWS = {
    1: ("[{0},{0,1/2}] 2 1/20", "[{0},{1/2},{1/30}] 3 1/400"),
    2: ("[{0},{0,1/30,1/2},{0,1/30,1/2},{0,1/30,1/2,3/4}] 4 1/4000", None),
}


def worked_chain(faults: Faults = NO_FAULTS) -> bool:
    """
    Replay the two-stage chain where 1/30 enters the increasing game at level 2 next
    to a level-1 parent and must land in the extra bucket of L̃.
    """
    p1 = ScriptedPlayer(UNIT_INTERVAL, WORKED_K, BallKind.PRODUCT)
    inner = ScriptedPlayer(UNIT_INTERVAL, [WORKED_L], BallKind.INCREASING, role=Role.PLAYER_2)
    transcript = play_composed(p1, compose_for_product_game(inner, UNIT_INTERVAL, faults), len(WORKED_K))
    if not transcript.complete:
        logger.warning(f"worked chain ended early: {transcript.reason}")
        return False
    for record in transcript.stages:
        k_tilde, l_tilde = WORKED_SHADOWS[record.stage]
        if record.k_tilde != parse_ball(k_tilde, BallKind.INCREASING):
            logger.warning(f"worked chain stage {record.stage}: K~ is {record.k_tilde}, expected {k_tilde}")
            return False
        if l_tilde is not None and record.l_tilde != parse_ball(l_tilde, BallKind.PRODUCT):
            logger.warning(f"worked chain stage {record.stage}: L~ is {record.l_tilde}, expected {l_tilde}")
            return False
    return all(record.passed for record in transcript.stages)


def closed_parent_threshold(faults: Faults = NO_FAULTS) -> bool:
    """A point exactly s̃ away from its parent still has that parent."""
    kball = parse_ball("[{1/400},{1/2},{1/30}] 3 1/1000", BallKind.PRODUCT)
    lball = parse_ball(WORKED_L, BallKind.INCREASING)
    ltilde = parse_ball(WORKED_SHADOWS[1][1], BallKind.PRODUCT)
    try:
        _, _, parents = forward_transfer(kball, lball, ltilde, UNIT_INTERVAL, faults)
    except TransferError as e:
        logger.warning(f"boundary point lost its parent: {e}")
        return False
    return parents[kball.center(1).points[0]] == 0


PROBES = {"worked_chain": worked_chain, "closed_parent_threshold": closed_parent_threshold}


def run_probes(faults: Faults = NO_FAULTS) -> Dict[str, bool]:
    return {name: probe(faults) for name, probe in PROBES.items()}

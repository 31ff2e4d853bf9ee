from hypothesis import settings
import pytest

from helpers import increasing_ball, product_ball
from mazur.game.composed import compose_for_product_game, play_composed
from mazur.game.probes import WORKED_K, WORKED_L
from mazur.game.strategy import Role
from mazur.geometry.balls import BallKind
from mazur.geometry.space import UNIT_INTERVAL
from mazur.strategies.basic import ScriptedPlayer

settings.register_profile("fast", max_examples=60, deadline=None)
settings.load_profile("fast")


@pytest.fixture
def worked_k1():
    return product_ball("[{0},{1/2}] 2 1/10")


@pytest.fixture
def worked_k2():
    return product_ball("[{0},{1/2},{1/30},{3/4}] 4 1/2000")


@pytest.fixture
def worked_l1():
    return increasing_ball("[{0},{0,1/30,1/2}] 2 1/200")


@pytest.fixture
def worked_transcript():
    """Two composed product-game stages; the inner player halves once its script runs out."""
    p1 = ScriptedPlayer(UNIT_INTERVAL, WORKED_K, BallKind.PRODUCT)
    inner = ScriptedPlayer(UNIT_INTERVAL, [WORKED_L], BallKind.INCREASING, Role.PLAYER_2)
    return play_composed(p1, compose_for_product_game(inner), len(WORKED_K))

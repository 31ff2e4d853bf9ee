from dataclasses import replace
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from helpers import increasing_ball, product_ball
from mazur.errors import GameAborted, UsageError
from mazur.game.composed import compose_for_increasing_game, compose_for_product_game, COMPOSERS, play_composed
from mazur.game.estimates import limit_estimate, limit_stability, union_agreement
from mazur.game.probes import closed_parent_threshold, run_probes, worked_chain
from mazur.game.referee import judge, play
from mazur.game.strategy import Role, Strategy
from mazur.game.transcript import Outcome, Transcript
from mazur.game.verification import (
    ancestor_bound,
    failing_stage,
    radii_decreasing,
    transcript_document,
    verify_transcript,
)
from mazur.geometry.balls import BallKind
from mazur.geometry.hyperspace import FiniteCompact
from mazur.geometry.space import UNIT_INTERVAL
from mazur.strategies.basic import ScriptedPlayer, ShrinkPlayer
from mazur.strategies.decay import DecayWrapper
from mazur.strategies.random_player import RandomPlayer
from mazur.transfer.faults import FAULT_NAMES
from mazur.transfer.stage import Direction, StageRecord
from mazur.transfer.transfer import ParentMap

F = Fraction


def scripted(*moves, variant=BallKind.PRODUCT, role=Role.PLAYER_1):
    return ScriptedPlayer(UNIT_INTERVAL, moves, variant, role)


class Quitter(Strategy):
    def move(self, history, opponent_move):
        raise GameAborted("bored")


def test_shrinking_game_completes():
    seen = []
    t = play(scripted("[{0},{1/2}] 2 1/10"), ShrinkPlayer(), 3, on_stage=seen.append)
    assert t.complete and t.loser is None
    assert [ball.radius for ball in t.moves] == [F(1, 10) / 2**i for i in range(6)]
    assert [record.stage for record in seen] == [1, 2, 3]
    checks = verify_transcript(t)
    assert checks == {"legal": True, "radii_decreasing": True, "limit_stability": True}


def test_illegal_nesting_loses_the_game():
    t = play(scripted("[{1/2}] 1 1/10", "[{0}] 1 1/100"), ShrinkPlayer(), 3)
    assert t.outcome is Outcome.ILLEGAL_MOVE
    assert t.loser is Role.PLAYER_1 and t.failed_stage == 2
    assert len(t.stages) == 1
    assert t.offending_move == product_ball("[{0}] 1 1/100")
    assert not verify_transcript(t)["legal"]


def test_invalid_opening_loses_at_stage_one():
    t = play(scripted("[{0,1/10}] 1 1/10"), ShrinkPlayer(), 2)
    assert t.outcome is Outcome.ILLEGAL_MOVE and t.failed_stage == 1
    assert "separation" in t.reason
    assert t.stages == []


def test_strategy_failures_and_aborts_end_the_game():
    failed = play(ShrinkPlayer(role=Role.PLAYER_1), ShrinkPlayer(), 2)
    assert failed.outcome is Outcome.STRATEGY_FAILURE and failed.loser is Role.PLAYER_1
    aborted = play(scripted("[{0}] 1 1/10"), Quitter(BallKind.PRODUCT, Role.PLAYER_2), 2)
    assert aborted.outcome is Outcome.ABORTED and aborted.loser is Role.PLAYER_2
    assert aborted.reason == "bored"


def test_play_refuses_bad_setups():
    with pytest.raises(UsageError):
        play(scripted("[{0}] 1 1/10"), ShrinkPlayer(), 0)
    with pytest.raises(UsageError):
        play(scripted("[{0}] 1 1/10"), ShrinkPlayer(variant=BallKind.INCREASING), 2)


def test_judge_reasons():
    outer = increasing_ball("[{0},{0,1/2}] 2 1/8")
    assert judge(outer, None, BallKind.INCREASING) is None
    assert "product ball" in judge(product_ball("[{0}] 1 1/8"), outer, BallKind.INCREASING)
    assert judge("[{0}] 1 1/8", outer, BallKind.INCREASING).startswith("expected a ball")
    assert judge(increasing_ball("[{0}] 1 1/16"), outer, BallKind.INCREASING) is not None


def test_worked_composed_game(worked_transcript):
    checks = verify_transcript(worked_transcript)
    assert all(checks.values()), checks
    assert {"radius_contraction", "stages", "ancestor_bound", "union_agreement"} <= set(checks)
    assert failing_stage(worked_transcript) is None
    assert union_agreement(worked_transcript) == 0

    stage2 = worked_transcript.stages[1]
    assert stage2.l_ball.radius == F(1, 8000)
    assert stage2.l_tilde == product_ball("[{0},{1/2},{1/30},{3/4},{}] 5 1/16000")


def test_composed_increasing_game():
    composed = compose_for_increasing_game(ShrinkPlayer(variant=BallKind.PRODUCT))
    t = play_composed(scripted("[{0},{0,1/2}] 2 1/8", variant=BallKind.INCREASING), composed, 2)
    assert t.complete and t.direction is Direction.INCREASING
    first, second = t.stages
    assert first.shadow1 == product_ball("[{0},{1/2}] 2 1/16")
    assert first.player2 == increasing_ball("[{0},{0,1/2}] 2 1/64")
    assert second.l_tilde == product_ball("[{0},{1/2},{}] 3 1/256")
    assert second.player2 == increasing_ball("[{0},{0,1/2},{0,1/2}] 3 1/1024")
    checks = verify_transcript(t)
    assert all(checks.values()), checks


def test_composition_needs_a_matching_inner_player():
    with pytest.raises(UsageError):
        compose_for_product_game(ShrinkPlayer(variant=BallKind.PRODUCT))
    with pytest.raises(UsageError):
        compose_for_increasing_game(ShrinkPlayer(variant=BallKind.PRODUCT, role=Role.PLAYER_1))


def test_plain_game_estimate_uses_the_last_reply():
    estimate = limit_estimate(play(scripted("[{0},{1/2}] 2 1/10"), ShrinkPlayer(), 1))
    assert estimate.stage == 1 and estimate.frozen == (1, 1)
    assert estimate.estimate(2) == FiniteCompact((F(1, 2),)) and estimate.error(2) == F(1, 20)
    with pytest.raises(UsageError):
        limit_estimate(play(scripted("[{0}] 1 1/10"), ShrinkPlayer(), 1), shadow=True)


def test_limit_estimates(worked_transcript):
    estimate = limit_estimate(worked_transcript)
    assert estimate.stage == 2
    assert estimate.estimate(1) == FiniteCompact((F(0),))
    assert estimate.error(1) == F(1, 2000)
    assert estimate.frozen == (1, 1, 2, 2)
    shadow = limit_estimate(worked_transcript, shadow=True)
    assert shadow.estimate(2) == FiniteCompact((F(0), F(1, 30), F(1, 2)))
    assert shadow.error(2) == F(1, 8000)
    assert shadow.frozen_at(2) == 1
    with pytest.raises(UsageError):
        limit_estimate(Transcript(BallKind.PRODUCT, 1))


def test_stability_and_decrease_catch_forged_transcripts():
    t = Transcript(BallKind.PRODUCT, 1)
    t.stages.append(StageRecord(1, product_ball("[{0}] 1 1/10"), product_ball("[{1/2}] 1 1/10")))
    assert not limit_stability(t)
    assert not radii_decreasing(t)


def test_transcript_document(worked_transcript):
    document = transcript_document(worked_transcript)
    assert document["outcome"] == "complete"
    assert document["direction"] == "product"
    assert document["limit"]["errors"][0] == "1/2000"
    assert document["limit"]["frozen"] == [1, 1, 2, 2]
    assert document["shadow_limit"]["stage"] == 2
    assert document["stages"][0]["affiliations"]["l"]["1/30"] == [3, 2]
    assert document["stages"][0]["parents"]["reverse"]["mapping"]["1/30"] == "0/1"


def test_probes():
    assert run_probes() == {"worked_chain": True, "closed_parent_threshold": True}
    assert not worked_chain(FAULT_NAMES["skip-dummy-bucket"])
    assert not worked_chain(FAULT_NAMES["rtilde-equals-r"])
    assert not closed_parent_threshold(FAULT_NAMES["open-threshold"])


def test_ancestor_bound_catches_forged_parents(worked_transcript):
    assert ancestor_bound(worked_transcript)
    first, second = worked_transcript.stages
    mapping = dict(second.forward_parents.mapping)
    mapping[F(1, 30)] = F(1, 2)
    far = replace(second, forward_parents=ParentMap(mapping, second.forward_parents.threshold))
    assert not ancestor_bound(replace(worked_transcript, stages=[first, far]))
    orphaned = replace(second, forward_parents=ParentMap())
    assert not ancestor_bound(replace(worked_transcript, stages=[first, orphaned]))


def random_composed_game(seed, direction, rounds, decay=None):
    composed_variant = BallKind(direction.value)
    inner_variant = BallKind.PRODUCT if composed_variant is BallKind.INCREASING else BallKind.INCREASING
    inner = RandomPlayer(seed=seed + 1, variant=inner_variant, role=Role.PLAYER_2)
    if decay is not None:
        inner = DecayWrapper(inner, ratio=decay)
    p1 = RandomPlayer(seed=seed, variant=composed_variant, growth="extend-by-1")
    return play_composed(p1, COMPOSERS[direction](inner), rounds)


@settings(max_examples=15)
@given(seed=st.integers(0, 2**16), direction=st.sampled_from(list(Direction)))
def test_random_inner_games_pass_every_check(seed, direction):
    t = random_composed_game(seed, direction, 6)
    assert t.complete, t.reason
    assert failing_stage(t) is None
    checks = verify_transcript(t)
    assert all(checks.values()), checks


@pytest.mark.parametrize("direction", list(Direction))
def test_decayed_inner_radii_vanish(direction):
    t = random_composed_game(5, direction, 8, decay="1/2")
    assert t.complete, t.reason
    # shadow2 is the inner strategy's own move in both directions
    assert all(r.shadow2.radius <= F(1, 2**r.stage) for r in t.stages)
    checks = verify_transcript(t)
    assert checks["decay"] and checks["radius_contraction"], checks

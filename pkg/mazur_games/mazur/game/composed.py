"""
Player II strategies built by transferring moves through the other game.

Player I's move is transferred into the other game, an inner Player II strategy
answers it there, and the answer is transferred back and played. Both shadow
moves and all transfer bookkeeping are kept per stage.
"""

from dataclasses import replace
import logging
from typing import Callable, Dict, List, Optional, Sequence

from mazur.errors import InvalidBallError, StrategyFailure, TransferError, UsageError
from mazur.geometry.balls import Ball, BallKind
from mazur.geometry.space import Space, UNIT_INTERVAL
from mazur.game.referee import judge, play
from mazur.game.strategy import Role, stage_of, Strategy
from mazur.game.transcript import Transcript
from mazur.transfer.faults import Faults, NO_FAULTS
from mazur.transfer.stage import Direction, stage_checks, StageRecord
from mazur.transfer.transfer import (
    forward_transfer,
    forward_transfer_first,
    increasing_affiliations,
    product_affiliations,
    reverse_transfer,
    reverse_transfer_first,
)

logger = logging.getLogger(__name__)


class ComposedStrategy(Strategy):
    direction: Direction
    inner_variant: BallKind

    def __init__(self, inner: Strategy, space: Space = UNIT_INTERVAL, faults: Faults = NO_FAULTS):
        super().__init__(self.direction.value, Role.PLAYER_2)
        if inner.variant is not self.inner_variant or inner.role is not Role.PLAYER_2:
            raise UsageError(f"{inner!r} cannot answer in the {self.inner_variant.value} game")
        self.inner = inner
        self.space = space
        self.faults = faults
        self.shadow_history: List[Ball] = []
        self.records: Dict[int, StageRecord] = {}

    @property
    def name(self) -> str:
        return f"{type(self).__name__}[{self.inner.name}]"

    def reset(self) -> None:
        self.inner.reset()
        self.shadow_history = []
        self.records = {}

    @property
    def previous(self) -> Optional[StageRecord]:
        return self.records.get(len(self.records))

    def _inner_reply(self, transferred: Ball, stage: int) -> Ball:
        self.shadow_history.append(transferred)
        reply = self.inner.move(tuple(self.shadow_history), transferred)
        reason = judge(reply, transferred, self.inner_variant, self.space)
        if reason is not None:
            raise StrategyFailure(f"inner strategy {self.inner.name} replied illegally at stage {stage}: {reason}")
        self.shadow_history.append(reply)
        return reply

    def move(self, history: Sequence[Ball], opponent_move: Optional[Ball]) -> Ball:
        m = stage_of(history)
        if opponent_move is None:
            raise StrategyFailure("a composed strategy only answers moves")
        try:
            record = self._stage(m, opponent_move)
        except (TransferError, InvalidBallError) as e:
            raise StrategyFailure(f"transfer failed at stage {m}: {e}") from e
        record = replace(record, checks=stage_checks(record, self.previous, self.space))
        self.records[m] = self.inner.annotate(record)
        return record.player2

    def _stage(self, m: int, opponent_move: Ball) -> StageRecord:
        raise NotImplementedError

    def annotate(self, record: StageRecord) -> StageRecord:
        mine = self.records.get(record.stage)
        if mine is None:
            return record
        return replace(mine, player1=record.player1, player2=record.player2)


class ComposedProductStrategy(ComposedStrategy):
    """Player II of the product game from a Player II of the increasing game."""

    direction = Direction.PRODUCT
    inner_variant = BallKind.INCREASING

    def _stage(self, m: int, kball: Ball) -> StageRecord:
        previous = self.previous
        if previous is None:
            ktilde = forward_transfer_first(kball, self.space, self.faults)
            k_table, forward_parents = product_affiliations(kball, ktilde), None
        else:
            ktilde, k_table, forward_parents = forward_transfer(
                kball, previous.l_ball, previous.l_tilde, self.space, self.faults
            )
        lball = self._inner_reply(ktilde, m)
        ltilde, l_table, reverse_parents = reverse_transfer(lball, kball, ktilde, self.space, self.faults)
        return StageRecord(
            stage=m,
            player1=kball,
            player2=ltilde,
            direction=self.direction,
            shadow1=ktilde,
            shadow2=lball,
            k_affiliations=k_table,
            l_affiliations=l_table,
            forward_parents=forward_parents,
            reverse_parents=reverse_parents,
        )


class ComposedIncreasingStrategy(ComposedStrategy):
    """Player II of the increasing game from a Player II of the product game."""

    direction = Direction.INCREASING
    inner_variant = BallKind.PRODUCT

    def _stage(self, m: int, lball: Ball) -> StageRecord:
        previous = self.previous
        if previous is None:
            ltilde = reverse_transfer_first(lball, self.space, self.faults)
            l_table, reverse_parents = increasing_affiliations(ltilde, lball), None
        else:
            ltilde, l_table, reverse_parents = reverse_transfer(
                lball, previous.k_ball, previous.k_tilde, self.space, self.faults
            )
        kball = self._inner_reply(ltilde, m)
        ktilde, k_table, forward_parents = forward_transfer(kball, lball, ltilde, self.space, self.faults)
        return StageRecord(
            stage=m,
            player1=lball,
            player2=ktilde,
            direction=self.direction,
            shadow1=ltilde,
            shadow2=kball,
            k_affiliations=k_table,
            l_affiliations=l_table,
            forward_parents=forward_parents,
            reverse_parents=reverse_parents,
        )


def compose_for_product_game(
    inner_winning: Strategy, space: Space = UNIT_INTERVAL, faults: Faults = NO_FAULTS
) -> ComposedProductStrategy:
    return ComposedProductStrategy(inner_winning, space, faults)


def compose_for_increasing_game(
    inner_winning: Strategy, space: Space = UNIT_INTERVAL, faults: Faults = NO_FAULTS
) -> ComposedIncreasingStrategy:
    return ComposedIncreasingStrategy(inner_winning, space, faults)


COMPOSERS = {Direction.PRODUCT: compose_for_product_game, Direction.INCREASING: compose_for_increasing_game}


def play_composed(
    p1: Strategy,
    composed: ComposedStrategy,
    rounds: int,
    space: Space = UNIT_INTERVAL,
    on_stage: Optional[Callable[[StageRecord], None]] = None,
) -> Transcript:
    return play(p1, composed, rounds, composed.variant, space, direction=composed.direction, on_stage=on_stage)
